#include "vtsim/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace vtsim {

void Trajectory::validate() const {
    if (times.size() != positions.size()) {
        throw std::invalid_argument("Trajectory: times/positions length mismatch");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !positions[i].is_finite()) {
            throw std::invalid_argument("Trajectory: non-finite value");
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw std::invalid_argument("Trajectory: times not strictly increasing");
        }
    }
}

double traj_sq_distance(const Trajectory& a, const Trajectory& b) {
    double sum = 0.0;
    const std::size_t n = a.positions.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2 d = a.positions[k] - b.positions[k];
        sum += d.norm2();
    }
    return sum;
}

}  // namespace vtsim
