#include "smithkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "smithkit/errors.hpp"

namespace smithkit::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

long long integer(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<long long>();
}

Index index_value(const Json& v, const std::string& what) {
  const long long x = integer(v, what);
  if (x < 0 || x > static_cast<long long>(UINT32_MAX - 1)) throw ParseError(what + " out of range");
  return static_cast<Index>(x);
}

BettiVector betti_vector(const Json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + " must be an array");
  std::vector<Count> out;
  for (const auto& e : v) out.push_back(integer(e, what + " entry"));
  return BettiVector(std::move(out));
}

bool boolean(const Json& obj, const char* key) {
  if (!obj.contains(key)) return false;
  if (!obj.at(key).is_boolean()) throw ParseError(std::string("flag \"") + key + "\" must be a boolean");
  return obj.at(key).get<bool>();
}

int small_int(const Json& v, const std::string& what) {
  const long long x = integer(v, what);
  if (x < -1000000 || x > 1000000) throw ParseError(what + " out of range");
  return static_cast<int>(x);
}

Json to_json(const BettiVector& b) { return Json(b.values()); }

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<Count>::min() && v <= std::numeric_limits<Count>::max())
    return Json(static_cast<Count>(v));
  return Json(v.str());
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  const bool nested = v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
  if (nested) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string as_table(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  return os.str();
}

std::string emit(const Json& doc, Format f) {
  switch (f) {
    case Format::json:
      return doc.dump(2) + "\n";
    case Format::table:
      return as_table(doc);
    case Format::csv:
      throw PreconditionError("csv output is only available for classification tables");
  }
  return {};
}

Json scan_json(const std::vector<ScanRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["ambient"] = r.ci.ambient_dim();
    row["degrees"] = r.ci.degrees();
    row["n"] = r.n;
    row["h_kk"] = r.h_kk;
    row["b_2k"] = r.b_2k;
    row["equal"] = r.admits_maximal_square;
    row["verdict"] = r.admits_maximal_square ? "admits_maximal_square" : "no_maximal_square";
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

SimplicialInvolution parse_complex(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("complex file must hold a JSON object");
  const long long count = integer(field(doc, "vertex_count"), "vertex_count");
  if (count < 0 || count > static_cast<long long>(UINT32_MAX - 1)) throw ParseError("vertex_count out of range");
  const Json& facets_json = field(doc, "facets");
  if (!facets_json.is_array()) throw ParseError("facets must be an array");
  std::vector<Simplex> facets;
  for (const auto& f : facets_json) {
    if (!f.is_array()) throw ParseError("each facet must be an array of vertex indices");
    Simplex s;
    for (const auto& v : f) s.push_back(index_value(v, "facet vertex"));
    facets.push_back(std::move(s));
  }
  const Json& inv_json = field(doc, "involution");
  if (!inv_json.is_array()) throw ParseError("involution must be an array");
  std::vector<Vertex> inv;
  for (const auto& v : inv_json) inv.push_back(index_value(v, "involution entry"));
  return SimplicialInvolution(SimplicialComplex(static_cast<std::size_t>(count), std::move(facets)), std::move(inv));
}

RealVarietyProfile parse_profile(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("profile file must hold a JSON object");
  RealVarietyProfile p;
  p.n = small_int(field(doc, "n"), "n");
  p.complex_betti = betti_vector(field(doc, "complex_betti"), "complex_betti");
  const Json& comps = field(doc, "real_components");
  if (!comps.is_array()) throw ParseError("real_components must be an array");
  for (const auto& c : comps) p.real_components.push_back(betti_vector(c, "real component"));
  const Json& flags = field(doc, "flags");
  if (!flags.is_object()) throw ParseError("flags must be an object");
  p.flags.maximal = boolean(flags, "maximal");
  p.flags.h_odd_zero = boolean(flags, "h_odd_zero");
  p.flags.torsion2_free = boolean(flags, "torsion2_free");
  p.flags.real_algebraic_generation = boolean(flags, "real_algebraic_generation");
  if (flags.contains("ci") && !flags.at("ci").is_null()) {
    const Json& ci = flags.at("ci");
    const int ambient = small_int(field(ci, "ambient"), "ci.ambient");
    const Json& degs = field(ci, "degrees");
    if (!degs.is_array()) throw ParseError("ci.degrees must be an array");
    std::vector<int> degrees;
    for (const auto& d : degs) degrees.push_back(small_int(d, "ci degree"));
    try {
      p.flags.complete_intersection = CompleteIntersection(ambient, std::move(degrees));
    } catch (const DomainError& e) {
      throw ParseError(std::string("ci: ") + e.what());
    }
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CiSummary summarize(const CompleteIntersection& ci) {
  return {ci, euler_characteristic(ci), complex_betti(ci), hodge_numbers(ci)};
}

std::string render(const SmithReport& r, Format f) {
  Json doc;
  doc["betti_X"] = to_json(r.betti_X);
  doc["betti_F"] = to_json(r.betti_F);
  doc["betti_rel"] = to_json(r.betti_rel);
  doc["coker_dims"] = r.coker_dims;
  doc["deficiency"] = r.deficiency;
  doc["maximal"] = r.maximal;
  doc["exactness_verified"] = r.exactness_verified;
  doc["transfer_verified"] = r.transfer_verified;
  doc["regular_vertex_count"] = r.regular_vertex_count;
  return emit(doc, f);
}

std::string render(const CiSummary& s, Format f) {
  const int n = s.ci.dimension();
  Json doc;
  doc["ambient"] = s.ci.ambient_dim();
  doc["degrees"] = s.ci.degrees();
  doc["n"] = n;
  doc["euler_characteristic"] = big(s.euler);
  doc["betti"] = to_json(s.betti);
  doc["betti_total"] = s.betti.total();
  doc["hodge_middle_row"] = s.hodge.middle_row();
  if (n % 2 == 0) {
    doc["h_kk"] = s.hodge.at(n / 2, n / 2);
    doc["hkk_equals_b2k"] = s.hodge.at(n / 2, n / 2) == s.betti[n];
  }
  doc["d_of_n"] = n >= 2 ? Json(d_of_n(n)) : Json(nullptr);
  return emit(doc, f);
}

std::string render(const ProfileCheck& c, Format f) {
  Json doc;
  doc["valid"] = c.violations.empty();
  Json v = Json::array();
  for (const auto& x : c.violations) v.push_back(Json{{"code", x.code}, {"message", x.message}});
  doc["violations"] = std::move(v);
  Json ids = Json::array();
  for (const auto& id : c.identities)
    ids.push_back(Json{{"identity", id.name}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds()}});
  doc["identities"] = std::move(ids);
  return emit(doc, f);
}

std::string render(const DeficiencyReport& r, Format f) {
  Json doc;
  doc["deficiency"] = optional_json(r.deficiency);
  doc["verdict"] = to_string(r.verdict);
  doc["reasons"] = r.reasons;

  Json strata;
  if (r.strata.h0) {
    strata["H0"] = Json{{"betti_low_degrees", to_json(r.strata.h0->low_degrees)},
                        {"twice_total", r.strata.h0->twice_total}};
  } else {
    strata["H0"] = nullptr;
  }
  Json comps = Json::array();
  for (std::size_t i = 0; i < r.strata.components.size(); ++i)
    comps.push_back(Json{{"betti", to_json(r.strata.components[i])}, {"total", r.strata.component_totals[i]}});
  strata["components"] = std::move(comps);
  strata["exceptional"] = Json{{"betti", to_json(r.strata.exceptional)}, {"total", r.strata.exceptional.total()}};
  strata["extra"] = to_json(r.strata.extra);
  doc["strata"] = std::move(strata);

  Json per = Json::object();
  for (const auto& [k, v] : r.per_degree_real_betti) per[std::to_string(k)] = v;
  doc["per_degree"] = std::move(per);
  doc["total_square_complex"] =
      Json{{"value", r.total_square_complex.value}, {"exact", r.total_square_complex.exact}};
  doc["total_square_real"] = optional_json(r.total_square_real);
  doc["euler_square_real"] = optional_json(r.euler_square_real);
  return emit(doc, f);
}

std::string render(const std::vector<ScanRow>& rows, Format f) {
  if (f == Format::json) return scan_json(rows).dump(2) + "\n";
  if (f == Format::csv) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
  }
  const std::vector<std::string> head{"ambient", "degrees", "n", "h_kk", "b_2k", "equal", "verdict"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.ci.ambient_dim()), r.ci.degree_label(), std::to_string(r.n),
                     std::to_string(r.h_kk), std::to_string(r.b_2k), r.admits_maximal_square ? "true" : "false",
                     r.admits_maximal_square ? "admits_maximal_square" : "no_maximal_square"});
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size())
        os << row[i];
      else
        os << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const FanoResult& r, Format f) {
  Json doc;
  doc["n"] = r.n;
  doc["defi_x"] = r.defi_x;
  doc["defi_square"] = r.defi_square;
  doc["defi_fano"] = r.defi_fano;
  return emit(doc, f);
}

}  // namespace smithkit::io
