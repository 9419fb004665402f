#ifndef LAWFORGE_RATIONAL_HPP
#define LAWFORGE_RATIONAL_HPP

#include <cstdint>

namespace lawforge {

/// Exact fraction used for the bound reports; not normalized.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;
};

}  // namespace lawforge

#endif
