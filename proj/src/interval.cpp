#include "anewdsc/interval.hpp"

#include "anewdsc/error.hpp"

namespace anewdsc {

Interval::Interval(Dyadic lo, Dyadic hi) : a(std::move(lo)), b(std::move(hi)) {
    if (!(a < b)) throw Error(ErrorKind::invalid_input, "interval needs a < b: " + to_string());
}

} // namespace anewdsc
