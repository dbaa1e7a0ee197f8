#include "cartan/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace cartan {

namespace {

std::string describe(const SparseVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i].first) + ":" + to_string(v[i].second);
  }
  return out + "]";
}

}  // namespace

CohomologySpace cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out, int degree) {
  if (d_in.rows != d_out.cols)
    throw std::invalid_argument("cohomology: target of d_in (" + std::to_string(d_in.rows) +
                                ") differs from source of d_out (" + std::to_string(d_out.cols) + ")");
  for (std::size_t j = 0; j < d_in.cols; ++j) {
    SparseVector w = d_out.apply(d_in.columns[j]);
    if (!w.empty())
      throw NotAComplex("d o d != 0 at degree " + std::to_string(degree) + ": source vector " +
                        std::to_string(j) + " maps to " + describe(w));
  }
  CohomologySpace h;
  h.degree_ = degree;
  h.d_out_ = d_out;
  h.echelon_ = column_reduce(d_in).image;
  // drop the column-combination tags of the image echelon: coboundaries carry class 0
  Echelon ech(d_out.cols);
  for (std::size_t r = 0; r < h.echelon_.rank(); ++r) ech.insert(h.echelon_.row(r));
  const ColumnReduction ker = column_reduce(d_out);
  for (SparseVector z : ker.kernel) {
    ech.reduce(z);
    if (z.empty()) continue;
    const Rational lead = z.front().second;
    z = scaled(z, 1 / lead);
    ech.insert(z, unit_vector(h.reps_.size()));
    h.reps_.push_back(std::move(z));
  }
  h.echelon_ = std::move(ech);
  return h;
}

CohomologySpace cohomology(const GradedMapSlice& d_in, const GradedMapSlice& d_out) {
  if (d_in.target_labels != d_out.source_labels)
    throw std::invalid_argument("cohomology: slices do not share the middle basis");
  return cohomology(d_in.matrix, d_out.matrix, d_out.source_degree);
}

std::vector<Rational> CohomologySpace::class_of(const SparseVector& z) const {
  SparseVector dz = d_out_.apply(z);
  if (!dz.empty()) throw NotACocycle("vector " + describe(z) + " has nonzero differential " + describe(dz));
  SparseVector v = z;
  SparseVector coords;
  echelon_.reduce(v, &coords);
  if (!v.empty()) throw std::logic_error("cocycle not spanned by coboundaries and representatives");
  return to_dense(coords, reps_.size());
}

bool CohomologySpace::is_coboundary(const SparseVector& z) const {
  const auto c = class_of(z);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_zero(x); });
}

std::size_t worker_count() {
  if (const char* env = std::getenv("CARTAN_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cartan
