#include "ghn/optimizer.hpp"

#include <algorithm>
#include <thread>

#include "ghn/error.hpp"

namespace ghn {

std::optional<LeadingTerm> leading_cochar(const CombinatorialRhoSheaf& sheaf) {
  auto ells = ell_functionals(sheaf);
  auto top = std::find_if(ells.begin(), ells.end(),
                          [](const EllFunctional& e) { return !is_zero(e.covector); });
  if (top == ells.end()) return std::nullopt;

  Matrix g = gram_matrix(sheaf.rep, sheaf.datum.torus_rank);
  auto sol = solve(g, top->covector);
  if (sol.status != LinearSolution::Status::Unique) {
    throw Error(Errc::DegenerateForm, "Gram matrix of the weights is singular");
  }
  LeadingTerm out;
  out.lambda = primitive_scale(sol.x);
  out.leading_degree = top->degree;
  out.value = nu(sheaf, out.lambda);
  return out;
}

namespace {

struct Best {
  std::optional<BruteForceResult> result;
};

// Candidate a beats b: larger nu, then primitive, then lexicographically
// smaller coordinates.
bool better(const BruteForceResult& a, const BruteForceResult& b) {
  auto ord = compare_nu(a.value, b.value);
  if (ord != 0) return ord > 0;
  bool pa = a.lambda.is_primitive();
  bool pb = b.lambda.is_primitive();
  if (pa != pb) return pa;
  return a.lambda.coords < b.lambda.coords;
}

void merge(Best& into, const Best& other) {
  if (!other.result) return;
  if (!into.result || better(*other.result, *into.result)) into.result = other.result;
}

}  // namespace

std::optional<BruteForceResult> brute_force_max(const CombinatorialRhoSheaf& sheaf,
                                                const BruteForceOptions& options) {
  if (options.bound < 1) throw Error(Errc::InvalidInput, "bound must be positive");
  const std::size_t n = sheaf.datum.torus_rank;
  const std::uint64_t side = static_cast<std::uint64_t>(2 * options.bound + 1);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > options.max_candidates / side) {
      throw Error(Errc::SearchSpaceTooLarge,
                  "(2B+1)^n_T exceeds the candidate cap of " +
                      std::to_string(options.max_candidates));
    }
    total *= side;
  }

  NuEvaluator eval(sheaf);
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    Best best;
    IntVec lambda(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = n; k-- > 0;) {
        lambda[k] = static_cast<std::int64_t>(rest % side) - options.bound;
        rest /= side;
      }
      NuValue v = eval(lambda);
      if (v.sign() <= 0) continue;
      BruteForceResult cand{Cocharacter{lambda}, std::move(v)};
      if (!best.result || better(cand, *best.result)) best.result = std::move(cand);
    }
    return best;
  };

  unsigned threads = std::max(1u, options.threads);
  Best best;
  if (threads == 1 || total < 2 * threads) {
    best = scan(0, total);
  } else {
    // Chunk results are merged in chunk order with an associative max, so
    // the answer does not depend on scheduling.
    std::vector<Best> partial(threads);
    {
      std::vector<std::jthread> workers;
      std::uint64_t chunk = (total + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = std::min(total, t * chunk);
        std::uint64_t hi = std::min(total, lo + chunk);
        workers.emplace_back([&, t, lo, hi] { partial[t] = scan(lo, hi); });
      }
    }
    for (const auto& p : partial) merge(best, p);
  }
  return best.result;
}

std::optional<Cocharacter> slope_canonical(const CombinatorialRhoSheaf& sheaf) {
  if (!is_central(sheaf.datum, sheaf.rep)) {
    throw Error(Errc::NotCentral, "representation is not central");
  }
  Vec psi = psi_functional(sheaf);
  Vec projected = pi_z(sheaf.datum, sheaf.rep, psi);
  if (is_zero(projected)) return std::nullopt;
  return primitive_scale(projected);
}

}  // namespace ghn
