#include "mdsconv/distance.hpp"

#include <functional>
#include <limits>
#include <queue>

namespace mdsconv {

std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t delta) {
  const CodeParams params{n, k, delta};
  params.validate();
  const std::size_t bound = (n - k) * (delta / k + 1) + delta + 1;
  if (bound != singleton_bound_alt(n, k, delta)) throw std::logic_error("Singleton bound forms disagree");
  return bound;
}

std::size_t singleton_bound_alt(std::size_t n, std::size_t k, std::size_t delta) {
  const CodeParams params{n, k, delta};
  params.validate();
  return n * params.nu() - (k - params.t()) + 1;
}

namespace {

std::uint64_t field_size_for_search(const Field& field) {
  const auto q = field.order_u64();
  if (!q) throw Error(ErrorCode::BudgetExceeded, field.name() + " is too large to search; use the certificate");
  return *q;
}

// q^e, saturating at max+1 so budget comparisons stay meaningful.
std::uint64_t capped_power(std::uint64_t q, std::size_t e, std::uint64_t max) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > max / q) return max + 1;
    r *= q;
  }
  return r;
}

std::size_t block_code_distance(const ConvCode& code, std::uint64_t q, const TrellisConfig& config) {
  const Matrix& g0 = code.coefficients().front();
  try {
    if (fullsize_minors_nonzero(g0, config.max_transitions).holds) return code.n() - code.k() + 1;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  const std::uint64_t inputs = capped_power(q, code.k(), config.max_transitions);
  if (inputs > config.max_transitions) {
    throw Error(ErrorCode::BudgetExceeded, "q^k inputs exceed the transition budget; use the certificate");
  }
  const Field& field = code.field();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Element> u(code.k(), field.zero());
  for (std::uint64_t idx = 1; idx < inputs; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t c = 0; c < code.k(); ++c) {
      u[c] = field.from_index(rest % q);
      rest /= q;
    }
    const auto v = combine_columns(g0, u);
    std::size_t w = 0;
    for (const auto& e : v) w += e.is_zero() ? 0 : 1;
    best = std::min(best, w);
  }
  return best;
}

}  // namespace

std::size_t free_distance_trellis(const ConvCode& code, const TrellisConfig& config) {
  const std::uint64_t q = field_size_for_search(code.field());
  if (code.delta() == 0) return block_code_distance(code, q, config);

  const std::size_t n = code.n(), k = code.k();
  const std::uint64_t num_states = capped_power(q, code.delta(), config.max_states);
  if (num_states > config.max_states) {
    throw Error(ErrorCode::BudgetExceeded, "q^delta states exceed the state budget; use the certificate");
  }
  const std::uint64_t num_inputs = capped_power(q, k, config.max_transitions);
  if (num_inputs > config.max_transitions || num_states > config.max_transitions / num_inputs) {
    throw Error(ErrorCode::BudgetExceeded, "q^(delta+k) transitions exceed the budget; use the certificate");
  }
  if (num_inputs * n > (std::uint64_t{1} << 27)) {
    throw Error(ErrorCode::BudgetExceeded, "input alphabet table too large");
  }

  const Field& field = code.field();
  const auto& g = code.coefficients();
  std::vector<Element> elems;
  elems.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(field.from_index(i));

  // Register layout: column j owns nu_j digits starting at place value reg_base[j];
  // digit d-1 holds u_{i-d, j}.
  std::vector<std::size_t> nu(k);
  std::vector<std::uint64_t> reg_base(k), reg_span(k);
  std::uint64_t place = 1;
  for (std::size_t j = 0; j < k; ++j) {
    nu[j] = code.params().column_degree(j);
    reg_base[j] = place;
    reg_span[j] = capped_power(q, nu[j], std::numeric_limits<std::uint64_t>::max() - 1);
    place *= reg_span[j];
  }

  // Per state: register contribution to the output, and the state with
  // registers shifted by one (new symbol slot zero).
  std::vector<std::uint32_t> reg_out(num_states * n);
  std::vector<std::uint64_t> shifted(num_states);
  for (std::uint64_t s = 0; s < num_states; ++s) {
    std::vector<Element> acc(n, field.zero());
    std::uint64_t next = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (nu[j] == 0) continue;
      const std::uint64_t reg = (s / reg_base[j]) % reg_span[j];
      std::uint64_t digits = reg;
      for (std::size_t d = 1; d <= nu[j]; ++d) {
        const std::uint64_t sym = digits % q;
        digits /= q;
        if (sym == 0) continue;
        for (std::size_t r = 0; r < n; ++r) acc[r] += g[d](r, j) * elems[sym];
      }
      next += ((reg % (reg_span[j] / q)) * q) * reg_base[j];
    }
    for (std::size_t r = 0; r < n; ++r) reg_out[s * n + r] = static_cast<std::uint32_t>(acc[r].index());
    shifted[s] = next;
  }

  // Per input block: -(G_0 u) and the digits it writes into the registers.
  std::vector<std::uint32_t> neg_direct(num_inputs * n);
  std::vector<std::uint64_t> inject(num_inputs);
  std::vector<std::uint8_t> direct_weight(num_inputs);
  for (std::uint64_t u = 0; u < num_inputs; ++u) {
    std::vector<Element> acc(n, field.zero());
    std::uint64_t rest = u, in = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t sym = rest % q;
      rest /= q;
      if (sym == 0) continue;
      if (nu[j] > 0) in += sym * reg_base[j];
      for (std::size_t r = 0; r < n; ++r) acc[r] += g[0](r, j) * elems[sym];
    }
    std::size_t w = 0;
    for (std::size_t r = 0; r < n; ++r) {
      w += acc[r].is_zero() ? 0 : 1;
      neg_direct[u * n + r] = static_cast<std::uint32_t>((-acc[r]).index());
    }
    direct_weight[u] = static_cast<std::uint8_t>(std::min<std::size_t>(w, 255));
    inject[u] = in;
  }

  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(num_states, kInf);
  using Item = std::pair<std::uint32_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;

  // First step from the zero state with u_0 != 0. Landing back on the zero
  // state means a codeword of length one.
  for (std::uint64_t u = 1; u < num_inputs; ++u) {
    std::uint32_t cost = 0;
    for (std::size_t r = 0; r < n; ++r) cost += neg_direct[u * n + r] != 0 ? 1U : 0U;
    const std::uint64_t to = inject[u];
    if (cost < dist[to]) {
      dist[to] = cost;
      if (to != 0) frontier.emplace(cost, to);
    }
  }

  while (!frontier.empty()) {
    const auto [d, s] = frontier.top();
    frontier.pop();
    if (d != dist[s]) continue;
    if (d >= dist[0]) break;
    const std::uint32_t* out = &reg_out[s * n];
    const std::uint64_t base = shifted[s];
    for (std::uint64_t u = 0; u < num_inputs; ++u) {
      const std::uint32_t* neg = &neg_direct[u * n];
      std::uint32_t cost = d;
      for (std::size_t r = 0; r < n; ++r) cost += out[r] != neg[r] ? 1U : 0U;
      const std::uint64_t to = base + inject[u];
      if (cost < dist[to] && cost < dist[0]) {
        dist[to] = cost;
        if (to != 0) frontier.emplace(cost, to);
      }
    }
  }
  return dist[0];
}

BruteForceResult free_distance_bruteforce(const ConvCode& code, std::size_t max_input_degree,
                                          std::uint64_t node_budget) {
  const std::uint64_t q = field_size_for_search(code.field());
  const std::size_t n = code.n(), k = code.k(), mu = code.mu(), L = max_input_degree;
  const std::uint64_t num_inputs = capped_power(q, k, std::uint64_t{1} << 20);
  if (num_inputs > (std::uint64_t{1} << 20)) {
    throw Error(ErrorCode::BudgetExceeded, "q^k input blocks are too many to enumerate");
  }
  const Field& field = code.field();
  const auto& g = code.coefficients();

  // products[u][d] = G_d u for every input block u.
  std::vector<std::vector<std::vector<Element>>> products(num_inputs);
  for (std::uint64_t u = 0; u < num_inputs; ++u) {
    std::vector<Element> block(k, field.zero());
    std::uint64_t rest = u;
    for (std::size_t c = 0; c < k; ++c) {
      block[c] = field.from_index(rest % q);
      rest /= q;
    }
    for (std::size_t d = 0; d <= mu; ++d) products[u].push_back(combine_columns(g[d], block));
  }

  auto block_weight = [&](const std::vector<std::uint64_t>& seq, std::size_t i) {
    // Weight of v_i = sum_d G_d u_{i-d} over the inputs u_0..u_L in seq.
    std::vector<Element> v(n, field.zero());
    for (std::size_t d = 0; d <= mu && d <= i; ++d) {
      const std::size_t l = i - d;
      if (l >= seq.size() || seq[l] == 0) continue;
      const auto& p = products[seq[l]][d];
      for (std::size_t r = 0; r < n; ++r) v[r] += p[r];
    }
    std::size_t w = 0;
    for (const auto& e : v) w += e.is_zero() ? 0 : 1;
    return w;
  };

  BruteForceResult result;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint64_t> seq;
  seq.reserve(L + 1);

  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t i, std::size_t partial) {
    for (std::uint64_t u = (i == 0 ? 1 : 0); u < num_inputs; ++u) {
      if (++result.nodes_visited > node_budget) {
        throw Error(ErrorCode::BudgetExceeded, "brute-force search exceeded its node budget");
      }
      seq.push_back(u);
      const std::size_t w = partial + block_weight(seq, i);
      if (w < best) {
        if (i == L) {
          std::size_t total = w;
          for (std::size_t tail = L + 1; tail <= L + mu && total < best; ++tail) total += block_weight(seq, tail);
          best = std::min(best, total);
        } else {
          extend(i + 1, w);
        }
      }
      seq.pop_back();
    }
  };
  extend(0, 0);
  result.weight = best;
  return result;
}

MdsResult is_mds(const ConvCode& code, const TrellisConfig& config) {
  MdsResult result;
  result.bound = singleton_bound(code.n(), code.k(), code.delta());
  try {
    result.distance = free_distance_trellis(code, config);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    result.verdict = MdsVerdict::Unknown;
    return result;
  }
  result.verdict = *result.distance == result.bound ? MdsVerdict::Yes : MdsVerdict::No;
  return result;
}

}  // namespace mdsconv
