#include "smithkit/classify.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "smithkit/errors.hpp"

namespace smithkit {
namespace {

// Non-decreasing degree lists of length <= max_len with entries in [2, max_degree].
void multisets(int max_len, int max_degree, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == max_len) return;
  for (int d = current.empty() ? 2 : current.back(); d <= max_degree; ++d) {
    current.push_back(d);
    multisets(max_len, max_degree, current, out);
    current.pop_back();
  }
}

ScanRow evaluate(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  const int k = n / 2;
  ScanRow row{ci, n, hodge_numbers(ci).at(k, k), complex_betti(ci)[n], false};
  row.admits_maximal_square = row.h_kk == row.b_2k;
  return row;
}

}  // namespace

std::vector<ScanRow> scan(const ScanRange& range) {
  if (range.max_dim < 1 || range.max_codim < 1 || range.max_degree < 1)
    throw DomainError("scan bounds must be at least 1");
  std::vector<std::vector<int>> degree_lists;
  std::vector<int> scratch;
  multisets(range.max_codim, range.max_degree, scratch, degree_lists);

  std::vector<CompleteIntersection> work;
  for (int n = 2; n <= range.max_dim; n += 2)
    for (const auto& degrees : degree_lists)
      work.emplace_back(n + static_cast<int>(degrees.size()), degrees);

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = (work.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<ScanRow>>> jobs;
  for (std::size_t begin = 0; begin < work.size(); begin += chunk) {
    const std::size_t end = std::min(work.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&work, begin, end] {
      std::vector<ScanRow> rows;
      for (std::size_t i = begin; i < end; ++i) rows.push_back(evaluate(work[i]));
      return rows;
    }));
  }
  std::vector<ScanRow> rows;
  for (auto& job : jobs) {
    auto part = job.get();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return a.n != b.n ? a.n < b.n : a.ci.degrees() < b.ci.degrees();
  });
  return rows;
}

bool lefschetz_trace_check(const CompleteIntersection& ci, const BettiVector& real_betti) {
  const int n = ci.dimension();
  if (n < 2 || n % 2 != 0) throw PreconditionError("lefschetz_trace_check needs even dimension at least 2");
  const int k = n / 2;
  if (real_betti.size() != static_cast<std::size_t>(n + 1) || !real_betti.palindromic())
    throw PreconditionError("real Betti vector must be palindromic of length n+1");
  for (int i = 0; i < k; ++i)
    if (real_betti[i] != 1) throw PreconditionError("real Betti numbers below the middle degree must be 1");
  const Count hkk = hodge_numbers(ci).at(k, k);
  return real_betti[k] == hkk && hkk == complex_betti(ci)[n];
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "ambient,degrees,n,h_kk,b_2k,equal,verdict\n";
  for (const auto& r : rows) {
    os << r.ci.ambient_dim() << ",\"" << r.ci.degree_label() << "\"," << r.n << ',' << r.h_kk << ',' << r.b_2k << ','
       << (r.admits_maximal_square ? "true" : "false") << ','
       << (r.admits_maximal_square ? "admits_maximal_square" : "no_maximal_square") << '\n';
  }
}

}  // namespace smithkit
