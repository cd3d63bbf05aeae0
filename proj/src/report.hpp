#pragma once

// JSON serialization of pipeline results for the command-line tool.

#include <json.hpp>

#include "hermipade/cheb_approx.hpp"

namespace hermipade::report {

using Json = nlohmann::ordered_json;

template <typename T>
Json coefficients(const std::vector<T>& c);

Json residual(const ResidualReport& r);
Json poles(const PoleCertificate& p);
Json radius(const RadiusCheck& r);
Json conditions(const ConditionReport& c);

template <typename T>
Json series_system(const SeriesSystem<T>& s, const AnalyticityInfo& info);

template <typename T>
Json hadamard(const DeterminantValue<T>& h);

template <typename T>
Json algebraic(const AlgebraicApproximant<T>& a);

template <typename T>
Json pipeline(const PipelineResult<T>& r);

// Radii as numbers, +inf as the string "inf".
Json radius_value(double r);

}  // namespace hermipade::report
