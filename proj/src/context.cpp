#include "anewdsc/context.hpp"

namespace anewdsc {

const detail::BallPoly& Context::coefficients(std::int64_t frac, bool derivative) {
    const int k = derivative ? 1 : 0;
    if (loaded_[k] && coeffs_[k].frac == frac) return coeffs_[k];
    if (derivative) {
        coeffs_[1] = detail::derivative(coefficients(frac, false));
    } else {
        coeffs_[0] = detail::load(*poly_, frac);
    }
    loaded_[k] = true;
    return coeffs_[k];
}

} // namespace anewdsc
