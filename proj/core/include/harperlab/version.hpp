#pragma once

#define HARPERLAB_VERSION "0.1.0"
