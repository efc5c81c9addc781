#pragma once

#include "adlv/io.hpp"
