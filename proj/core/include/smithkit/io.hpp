#pragma once

#include <string>
#include <vector>

#include "smithkit/classify.hpp"
#include "smithkit/complete_intersection.hpp"
#include "smithkit/hilbert_square.hpp"
#include "smithkit/profile.hpp"
#include "smithkit/simplicial_complex.hpp"
#include "smithkit/smith.hpp"

namespace smithkit::io {

// {"vertex_count": int, "facets": [[int,...],...], "involution": [int,...]}
// Throws ParseError for malformed text or fields, StructuralError when the
// data does not describe a simplicial involution.
SimplicialInvolution parse_complex(const std::string& text);

// {"n", "complex_betti", "real_components", "flags": {"maximal", "ci":
// {"ambient", "degrees"} | null, "h_odd_zero", "torsion2_free",
// "real_algebraic_generation"}}. Missing boolean flags read as false.
RealVarietyProfile parse_profile(const std::string& text);

std::string read_file(const std::string& path);

// csv applies to scan tables only.
enum class Format { json, table, csv };

/// Everything the ci subcommand reports about one complete intersection.
struct CiSummary {
  CompleteIntersection ci;
  BigInt euler;
  BettiVector betti;
  HodgeDiamond hodge;
};
CiSummary summarize(const CompleteIntersection& ci);

struct ProfileCheck {
  std::vector<Violation> violations;
  std::vector<BettiIdentity> identities;  // empty unless the profile is valid and maximal
};

struct FanoResult {
  int n = 0;
  Count defi_x = 0;
  Count defi_square = 0;
  Count defi_fano = 0;
};

// Renderers. JSON output has a fixed key order and ends with a newline.
std::string render(const SmithReport& r, Format f);
std::string render(const CiSummary& s, Format f);
std::string render(const ProfileCheck& c, Format f);
std::string render(const DeficiencyReport& r, Format f);
std::string render(const std::vector<ScanRow>& rows, Format f);
std::string render(const FanoResult& r, Format f);

}  // namespace smithkit::io
