#include "hnls/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace hnls {

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"paper_dnlse", "gaussian",
                                                   "shifted_gaussian"};
    return names;
}

Complex preset_value(const std::string& name, double x) {
    if (name == "paper_dnlse") {
        const Complex phase = std::polar(std::exp(-0.5 * (x - 1.0) * (x - 1.0)), x);
        return phase + std::exp(-0.25 * (x + 2.0) * (x + 2.0));
    }
    if (name == "gaussian") {
        return std::exp(-0.5 * x * x);
    }
    if (name == "shifted_gaussian") {
        return std::exp(-0.5 * (x - 1.0) * (x - 1.0));
    }
    throw std::invalid_argument("unknown initial preset '" + name + "'");
}

SpectralField initial_preset(const std::string& name, const HermiteBasis& basis) {
    Eigen::VectorXcd values(basis.modes());
    for (int j = 0; j < basis.modes(); ++j) {
        values[j] = preset_value(name, basis.rule().nodes[j]);
    }
    return basis.interpolate(NodalField(std::move(values)));
}

}  // namespace hnls
