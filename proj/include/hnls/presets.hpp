#pragma once

#include <string>
#include <vector>

#include "hnls/basis.hpp"
#include "hnls/field.hpp"

namespace hnls {

/// Named initial conditions, interpolated onto the basis:
///   paper_dnlse       exp(i x - (x-1)^2/2) + exp(-(x+2)^2/4)
///   gaussian          exp(-x^2/2)
///   shifted_gaussian  exp(-(x-1)^2/2)
SpectralField initial_preset(const std::string& name, const HermiteBasis& basis);

const std::vector<std::string>& preset_names();

/// Closed-form value of a preset at a point (test and plotting helper).
Complex preset_value(const std::string& name, double x);

}  // namespace hnls
