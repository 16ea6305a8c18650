#pragma once

#include <ostream>
#include <vector>

#include "smithkit/betti_vector.hpp"
#include "smithkit/complete_intersection.hpp"

namespace smithkit {

struct ScanRange {
  int max_dim = 2;     // largest even dimension scanned
  int max_codim = 1;   // number of equations of degree >= 2
  int max_degree = 2;  // largest degree of an equation
};

struct ScanRow {
  CompleteIntersection ci;
  int n = 0;
  Count h_kk = 0;
  Count b_2k = 0;
  // h^{k,k} = b_{2k}: a maximal real form can have a maximal Hilbert square.
  bool admits_maximal_square = false;
};

// Every canonical complete intersection of even dimension 2..max_dim with up
// to max_codim equations of degree 2..max_degree, plus linear spaces. Rows are
// computed in parallel and sorted by (n, degrees). Throws DomainError for
// bounds below 1.
std::vector<ScanRow> scan(const ScanRange& range);

// For n = 2k, a real Betti vector with b_i = 1 below the middle: true when the
// middle value matches h^{k,k} and h^{k,k} = b_{2k}, i.e. when the trace
// argument leaves room for a maximal X with maximal square.
bool lefschetz_trace_check(const CompleteIntersection& ci, const BettiVector& real_betti);

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace smithkit
