#pragma once
// JSON (de)serialization for every value the CLI reads or writes. Parse
// failures throw PreconditionError with a message naming the offending field.

#include <json.hpp>

#include "homforge/deformation.hpp"
#include "homforge/hom_core.hpp"
#include "homforge/model_search.hpp"
#include "homforge/theorem_harness.hpp"

namespace homforge::io {

using nlohmann::json;

json to_json(const FiniteHomStructure& h);
FiniteHomStructure structure_from_json(const json& j);

json to_json(const DegeneracyReport& rep);
json to_json(const AlphaProperties& props);
json to_json(const IdentityReport& rep);
json to_json(const search::SearchConstraints& c);
json to_json(const theorems::HarnessReport& rep);
json to_json(const theorems::NatExampleReport& rep);

fp::Mat mat_from_json(const json& j, int dim, int p);
fp::Tensor3 tensor_from_json(const json& j, int dim, int p);
json to_json(const fp::Mat& m);
json to_json(const fp::Tensor3& t);
json to_json(const deform::DefectTensor& t);

// Deformation: {"p", "dim", "order", "mu": [N+1 tensors], "alpha": [N+1 matrices]}.
json to_json(const deform::DeformationTriple& d);
deform::DeformationTriple deformation_from_json(const json& j);

// Linear series alone: {"p", "dim", "order", "alpha": [N+1 matrices]}.
json linear_series_to_json(const deform::TruncatedLinearSeries& s);
deform::TruncatedLinearSeries linear_series_from_json(const json& j);

// Associative multiplication series: {"p", "dim", "order", "star": [N+1 tensors]}.
json star_series_to_json(const deform::TruncatedBilinearSeries& s);
deform::TruncatedBilinearSeries star_series_from_json(const json& j);

// Formal isomorphism: {"order", "phi": [N+1 matrices]}; p and dim come from
// the deformation it accompanies.
deform::FormalIsomorphism phi_from_json(const json& j, int dim, int p);

}  // namespace homforge::io
