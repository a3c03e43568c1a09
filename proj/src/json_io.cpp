#include "homforge/json_io.hpp"

#include <string>

namespace homforge::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw PreconditionError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw PreconditionError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw PreconditionError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw PreconditionError(what + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_integer())
      throw PreconditionError(what + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

json witness_json(const std::optional<WitnessPair>& w) {
  if (!w) return nullptr;
  return json::array({w->a, w->b});
}

}  // namespace

json to_json(const FiniteHomStructure& h) {
  json table = json::array();
  for (int x = 0; x < h.size; ++x) {
    json row = json::array();
    for (int y = 0; y < h.size; ++y) row.push_back(h.prod(x, y));
    table.push_back(std::move(row));
  }
  return json{{"size", h.size}, {"table", std::move(table)}, {"alpha", h.alpha}};
}

FiniteHomStructure structure_from_json(const json& j) {
  int n = int_field(j, "size");
  if (n < 1) throw PreconditionError("size must be positive");
  const json& table = field(j, "table");
  if (!table.is_array() || static_cast<int>(table.size()) != n)
    throw PreconditionError("table must be an array of " + std::to_string(n) + " rows");
  FiniteHomStructure h;
  h.size = n;
  h.table.reserve(static_cast<size_t>(n) * n);
  for (const json& row : table) {
    auto r = int_array(row, "table row");
    if (static_cast<int>(r.size()) != n)
      throw PreconditionError("table row has wrong length");
    h.table.insert(h.table.end(), r.begin(), r.end());
  }
  h.alpha = int_array(field(j, "alpha"), "alpha");
  validate(h);  // range errors carry "index out of range"
  return h;
}

json to_json(const DegeneracyReport& rep) {
  return json{{"left", witness_json(rep.left)},
              {"right", witness_json(rep.right)},
              {"strong", witness_json(rep.strong)},
              {"two_sided", rep.two_sided}};
}

json to_json(const AlphaProperties& props) {
  return json{{"surjective", props.surjective},
              {"injective", props.injective},
              {"bijective", props.bijective}};
}

json to_json(const IdentityReport& rep) {
  json eqs = json::array();
  for (const EquationCheck& e : rep.equations) {
    json one{{"name", e.name}, {"holds", e.holds}};
    if (!e.holds) one["first_violation"] = e.first_violation;
    eqs.push_back(std::move(one));
  }
  return json{{"equations", std::move(eqs)}, {"all_hold", rep.all_hold()}};
}

json to_json(const search::SearchConstraints& c) {
  const char* alpha = "any";
  switch (c.alpha_filter) {
    case search::AlphaFilter::any: alpha = "any"; break;
    case search::AlphaFilter::surjective: alpha = "surjective"; break;
    case search::AlphaFilter::identity: alpha = "identity"; break;
    case search::AlphaFilter::fixed: alpha = "fixed"; break;
  }
  const char* degeneracy = "any";
  switch (c.degeneracy_filter) {
    case search::DegeneracyFilter::any: degeneracy = "any"; break;
    case search::DegeneracyFilter::strongly_degenerate:
      degeneracy = "strongly_degenerate";
      break;
    case search::DegeneracyFilter::not_strongly_degenerate:
      degeneracy = "not_strongly_degenerate";
      break;
  }
  const char* twist = "any";
  switch (c.twist_filter) {
    case search::TwistFilter::any: twist = "any"; break;
    case search::TwistFilter::twist: twist = "twist"; break;
    case search::TwistFilter::non_twist: twist = "non_twist"; break;
  }
  json out{{"size", c.size},
           {"require_hom_associative", c.require_hom_associative},
           {"alpha", alpha},
           {"degeneracy", degeneracy},
           {"twist", twist},
           {"canonical_only", c.canonical_only}};
  if (c.alpha_filter == search::AlphaFilter::fixed) out["fixed_alpha"] = c.fixed_alpha;
  return out;
}

json to_json(const theorems::HarnessReport& rep) {
  json sizes = json::object();
  for (const auto& [n, counts] : rep.sizes) {
    json per = json::object();
    for (const auto& [key, value] : counts) per[key] = value;
    sizes[std::to_string(n)] = std::move(per);
  }
  json violations = json::array();
  for (const FiniteHomStructure& h : rep.violations) violations.push_back(to_json(h));
  return json{{"proposition", rep.proposition},
              {"sizes", std::move(sizes)},
              {"violations", std::move(violations)},
              {"pass", rep.pass}};
}

json to_json(const theorems::NatExampleReport& rep) {
  json out{{"proposition", "nat"},
           {"bound", rep.bound},
           {"shift", rep.shift},
           {"hom_associative", rep.hom_associative},
           {"fiber_of_zero_empty", rep.fiber_of_zero_empty},
           {"zero_attained", rep.zero_attained},
           {"seconds", rep.seconds},
           {"pass", rep.pass}};
  if (rep.hom_violation)
    out["hom_violation"] = json::array(
        {(*rep.hom_violation)[0], (*rep.hom_violation)[1], (*rep.hom_violation)[2]});
  return out;
}

fp::Mat mat_from_json(const json& j, int dim, int p) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw PreconditionError("matrix must have " + std::to_string(dim) + " rows");
  fp::Mat m(dim, dim, p);
  for (int r = 0; r < dim; ++r) {
    auto row = int_array(j[r], "matrix row");
    if (static_cast<int>(row.size()) != dim)
      throw PreconditionError("matrix row has wrong length");
    for (int c = 0; c < dim; ++c) {
      if (row[c] < 0 || row[c] >= p)
        throw PreconditionError("matrix entry out of range", {row[c]});
      m.at(r, c) = row[c];
    }
  }
  return m;
}

fp::Tensor3 tensor_from_json(const json& j, int dim, int p) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw PreconditionError("tensor must have " + std::to_string(dim) + " slices");
  fp::Tensor3 t(dim, p);
  for (int x = 0; x < dim; ++x) {
    const json& plane = j[x];
    if (!plane.is_array() || static_cast<int>(plane.size()) != dim)
      throw PreconditionError("tensor slice has wrong shape");
    for (int y = 0; y < dim; ++y) {
      auto fiber = int_array(plane[y], "tensor fiber");
      if (static_cast<int>(fiber.size()) != dim)
        throw PreconditionError("tensor fiber has wrong length");
      for (int k = 0; k < dim; ++k) {
        if (fiber[k] < 0 || fiber[k] >= p)
          throw PreconditionError("tensor entry out of range", {fiber[k]});
        t.at(x, y, k) = fiber[k];
      }
    }
  }
  return t;
}

json to_json(const fp::Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const fp::Tensor3& t) {
  json planes = json::array();
  for (int x = 0; x < t.dim; ++x) {
    json plane = json::array();
    for (int y = 0; y < t.dim; ++y) {
      json fiber = json::array();
      for (int k = 0; k < t.dim; ++k) fiber.push_back(t.at(x, y, k));
      plane.push_back(std::move(fiber));
    }
    planes.push_back(std::move(plane));
  }
  return planes;
}

json to_json(const deform::DefectTensor& t) {
  json out = json::array();
  for (int x = 0; x < t.dim; ++x) {
    json px = json::array();
    for (int y = 0; y < t.dim; ++y) {
      json py = json::array();
      for (int z = 0; z < t.dim; ++z) {
        json fiber = json::array();
        for (int k = 0; k < t.dim; ++k) fiber.push_back(t.at(x, y, z, k));
        py.push_back(std::move(fiber));
      }
      px.push_back(std::move(py));
    }
    out.push_back(std::move(px));
  }
  return out;
}

namespace {

struct SeriesHeader {
  int p, dim, order;
};

SeriesHeader series_header(const json& j) {
  SeriesHeader h{int_field(j, "p"), int_field(j, "dim"), int_field(j, "order")};
  if (!fp::is_prime(h.p)) throw PreconditionError("p must be prime");
  if (h.dim < 1 || h.dim > 4) throw PreconditionError("dim out of budget (1..4)");
  if (h.order < 0) throw PreconditionError("order must be nonnegative");
  return h;
}

std::vector<fp::Mat> mat_list(const json& j, const SeriesHeader& h) {
  if (!j.is_array() || static_cast<int>(j.size()) != h.order + 1)
    throw PreconditionError("series must have order+1 coefficients");
  std::vector<fp::Mat> out;
  for (const json& m : j) out.push_back(mat_from_json(m, h.dim, h.p));
  return out;
}

std::vector<fp::Tensor3> tensor_list(const json& j, const SeriesHeader& h) {
  if (!j.is_array() || static_cast<int>(j.size()) != h.order + 1)
    throw PreconditionError("series must have order+1 coefficients");
  std::vector<fp::Tensor3> out;
  for (const json& t : j) out.push_back(tensor_from_json(t, h.dim, h.p));
  return out;
}

}  // namespace

json to_json(const deform::DeformationTriple& d) {
  json mu = json::array();
  for (const fp::Tensor3& t : d.mu_t.coeffs) mu.push_back(to_json(t));
  json alpha = json::array();
  for (const fp::Mat& m : d.alpha_t.coeffs) alpha.push_back(to_json(m));
  return json{{"p", d.base.p},
              {"dim", d.base.dim},
              {"order", d.mu_t.order},
              {"mu", std::move(mu)},
              {"alpha", std::move(alpha)}};
}

deform::DeformationTriple deformation_from_json(const json& j) {
  SeriesHeader h = series_header(j);
  deform::TruncatedBilinearSeries mu{h.order, tensor_list(field(j, "mu"), h)};
  deform::TruncatedLinearSeries alpha{h.order, mat_list(field(j, "alpha"), h)};
  return deform::make_deformation(std::move(mu), std::move(alpha));
}

json linear_series_to_json(const deform::TruncatedLinearSeries& s) {
  json alpha = json::array();
  for (const fp::Mat& m : s.coeffs) alpha.push_back(to_json(m));
  return json{{"p", s.p()}, {"dim", s.dim()}, {"order", s.order}, {"alpha", std::move(alpha)}};
}

deform::TruncatedLinearSeries linear_series_from_json(const json& j) {
  SeriesHeader h = series_header(j);
  deform::TruncatedLinearSeries s{h.order, mat_list(field(j, "alpha"), h)};
  deform::validate(s);
  return s;
}

json star_series_to_json(const deform::TruncatedBilinearSeries& s) {
  json star = json::array();
  for (const fp::Tensor3& t : s.coeffs) star.push_back(to_json(t));
  return json{{"p", s.p()}, {"dim", s.dim()}, {"order", s.order}, {"star", std::move(star)}};
}

deform::TruncatedBilinearSeries star_series_from_json(const json& j) {
  SeriesHeader h = series_header(j);
  deform::TruncatedBilinearSeries s{h.order, tensor_list(field(j, "star"), h)};
  deform::validate(s);
  return s;
}

deform::FormalIsomorphism phi_from_json(const json& j, int dim, int p) {
  SeriesHeader h{p, dim, int_field(j, "order")};
  if (h.order < 0) throw PreconditionError("order must be nonnegative");
  deform::FormalIsomorphism phi{h.order, mat_list(field(j, "phi"), h)};
  deform::validate(phi);
  return phi;
}

}  // namespace homforge::io
