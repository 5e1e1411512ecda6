#pragma once
// Turns one ExperimentConfig into a Report: builds the geometry, the instance
// and the trial functions, runs the named experiment deterministically.

#include "hardy/config.hpp"
#include "hardy/estimator.hpp"
#include "hardy/report.hpp"

namespace hardy {

GeometrySpec geometry_from_config(const GeometryConfig& g);
QuadratureScheme scheme_from_config(const ExperimentConfig& c);
InequalityInstance instance_from_config(const ExperimentConfig& c, const GeometrySpec& geom);

// Product of coordinate bumps centered at c with half-widths w, with the
// closed horizontal gradient of the geometry attached.
TrialFunction product_bump(const GeometrySpec& geom, const Eigen::VectorXd& center,
                           const Eigen::VectorXd& width);

Report run(const ExperimentConfig& cfg);

} // namespace hardy
