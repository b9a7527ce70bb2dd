#include "affstrat/whitney.hpp"

#include "affstrat/errors.hpp"
#include "affstrat/matrix.hpp"

namespace affstrat {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

std::vector<std::string> prefixed(const RingPtr& ring, const std::string& prefix) {
  std::vector<std::string> names;
  for (const auto& n : ring->names()) names.push_back(prefix + n);
  return names;
}

RingPtr gamma1_ring(const PairContext& ctx) {
  const auto& base = ctx.X.ring;
  std::vector<std::string> extra;
  for (const char* p : {"_y_", "_w_", "_v_"}) {
    auto names = prefixed(base, p);
    extra.insert(extra.end(), names.begin(), names.end());
  }
  extra.push_back("_gamma");
  for (std::size_t i = 0; i < ctx.G.size(); ++i) extra.push_back("_lambda" + std::to_string(i + 1));
  return extend_ring(base, extra);
}

// Gamma_2 (plus optional minor condition) projected to the x-block.
Ideal failure_projection(const PairContext& ctx, const Ideal& C, const Polynomial* minor) {
  const auto& base = ctx.X.ring;
  const std::size_t n = base->size();
  std::vector<std::string> extra = prefixed(base, "_w_");
  auto vn = prefixed(base, "_v_");
  extra.insert(extra.end(), vn.begin(), vn.end());
  extra.push_back("_gamma2");
  extra.push_back("_lambda2");
  if (minor) extra.push_back("_mu");
  auto ring = extend_ring(base, extra);
  // C lives in (x, y, w, v); restrict to the diagonal y = x.
  std::vector<std::size_t> map(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = i;
    map[n + i] = i;
    map[2 * n + i] = n + i;
    map[3 * n + i] = 2 * n + i;
  }
  std::vector<Polynomial> gens;
  for (const auto& h : C.generators()) gens.push_back(h.remap(ring, map));
  Polynomial vw(ring);
  for (std::size_t j = 0; j < n; ++j)
    vw += Polynomial::variable(ring, n + j) * Polynomial::variable(ring, 2 * n + j);
  const auto one = Polynomial::constant(ring, 1);
  gens.push_back(Polynomial::variable(ring, 3 * n) * vw - one);
  gens.push_back(Polynomial::variable(ring, 3 * n + 1) * ctx.pY.embed(ring) - one);
  if (minor) gens.push_back(Polynomial::variable(ring, 3 * n + 2) * minor->embed(ring) - one);
  Ideal E = elimination_ideal(Ideal(ring, std::move(gens)), range(0, n));
  std::vector<Polynomial> out;
  for (const auto& g : E.generators()) out.push_back(g.embed(base));
  return Ideal(base, std::move(out));
}

Ideal checked_locus(const PairContext& ctx, const Ideal& W) {
  Ideal R = W.is_unit() ? W : radical(W);
  const long dw = dimension(R);
  const long dy = dimension(ctx.Y);
  if (dw >= dy)
    throw WhitneyDimensionViolation("failure locus of dimension " + std::to_string(dw) +
                                    " inside a set of dimension " + std::to_string(dy));
  return R;
}

VarietySpec spec_of(const Ideal& radical_ideal) {
  VarietySpec s;
  s.ring = radical_ideal.ring();
  s.ideal = radical_ideal;
  const long d = dimension(radical_ideal);
  if (d < 0) throw DegenerateInput("empty variety");
  s.codim = s.ring->size() - static_cast<std::size_t>(d);
  for (const auto& g : s.generators()) s.degree_bound = std::max(s.degree_bound, g.total_degree());
  return s;
}

}  // namespace

Ideal build_gamma1(const PairContext& ctx) {
  const auto& base = ctx.X.ring;
  const std::size_t n = base->size();
  const std::size_t r = ctx.G.size();
  auto ring = gamma1_ring(ctx);
  std::vector<std::size_t> to_y(n);
  for (std::size_t i = 0; i < n; ++i) to_y[i] = n + i;
  std::vector<Polynomial> gens;
  for (const auto& g : ctx.X.generators()) gens.push_back(g.embed(ring));
  for (const auto& g : ctx.Y.grevlex_basis()) gens.push_back(g.remap(ring, to_y));
  const auto gamma = Polynomial::variable(ring, 4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::variable(ring, 2 * n + i) -
                   gamma * (Polynomial::variable(ring, i) - Polynomial::variable(ring, n + i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial v = Polynomial::variable(ring, 3 * n + i);
    for (std::size_t k = 0; k < r; ++k)
      v -= Polynomial::variable(ring, 4 * n + 1 + k) * ctx.G[k].derivative(i).embed(ring);
    gens.push_back(std::move(v));
  }
  return Ideal(ring, std::move(gens));
}

Ideal conormal_secant_variety(const PairContext& ctx) {
  ComputationLabel label("conormal-secant variety");
  const std::size_t n = ctx.X.ring->size();
  return elimination_ideal(build_gamma1(ctx), range(0, 4 * n));
}

Ideal whitney_b_failure_locus(const PairContext& ctx) {
  ComputationLabel label("Whitney (b) failure locus");
  if (ctx.G.empty()) return Ideal::unit(ctx.X.ring);
  const Ideal C = conormal_secant_variety(ctx);
  return checked_locus(ctx, failure_projection(ctx, C, nullptr));
}

Ideal partial_failure_locus(const PairContext& ctx, const std::vector<Polynomial>& f,
                            const std::vector<Polynomial>& GY) {
  ComputationLabel label("rank-restricted failure locus");
  const auto& base = ctx.X.ring;
  const std::size_t n = base->size();
  const std::size_t m = f.size();
  const std::size_t p = GY.size();
  if (ctx.G.empty() || m + p > n) return Ideal::unit(base);
  LocalizedVariety Yloc{spec_of(ctx.Y), ctx.pY};
  if (generic_rank(Yloc, GY, f) < static_cast<long>(m)) return Ideal::unit(base);
  std::vector<Polynomial> rows = f;
  rows.insert(rows.end(), GY.begin(), GY.end());
  const PolyMatrix A = jacobian(rows, range(0, n));
  const auto all_rows = range(0, m + p);
  std::optional<Ideal> C;
  std::vector<Ideal> branches;
  for (const auto& cols : combinations(n, m + p)) {
    const Polynomial M = minor(A, all_rows, cols, base);
    if (saturated_member(M, ctx.Y, ctx.pY)) continue;
    if (!C) C = conormal_secant_variety(ctx);
    Ideal b = failure_projection(ctx, *C, &M);
    if (!b.is_unit()) branches.push_back(std::move(b));
  }
  if (branches.empty()) return Ideal::unit(base);
  return checked_locus(ctx, intersect(branches, base));
}

long generic_rank(const LocalizedVariety& Z, const std::vector<Polynomial>& G,
                  const std::vector<Polynomial>& f) {
  ComputationLabel label("generic rank");
  const auto& ring = Z.base.ring;
  const std::size_t n = ring->size();
  const std::size_t m = f.size();
  const std::size_t r = G.size();
  std::vector<Polynomial> rows = f;
  rows.insert(rows.end(), G.begin(), G.end());
  const PolyMatrix A = jacobian(rows, range(0, n));
  const std::size_t kmax = std::min(m, n >= r ? n - r : 0);
  for (std::size_t k = kmax; k > 0; --k) {
    for (const auto& fsub : combinations(m, k)) {
      std::vector<std::size_t> sel = fsub;
      for (std::size_t g = 0; g < r; ++g) sel.push_back(m + g);
      for (const auto& cols : combinations(n, k + r)) {
        const Polynomial M = minor(A, sel, cols, ring);
        if (!saturated_member(M, Z.base.ideal, Z.localizer)) return static_cast<long>(k);
      }
    }
  }
  return 0;
}

Stratification build_filtration(const VarietySpec& X, FiltrationMode mode,
                                 const std::vector<Polynomial>& f, const GenericityConfig& cfg,
                                 Rng& rng) {
  ComputationLabel label("filtration");
  Stratification S;
  S.ring = X.ring;
  S.mode = mode;
  const long m = static_cast<long>(f.size());
  Ideal current = X.ideal;
  while (true) {
    ComputationLabel level_label("level " + std::to_string(S.levels.size()));
    auto pieces = equidimensional_radicals(current);
    if (pieces.empty()) {
      S.tail = Ideal::unit(X.ring);
      break;
    }
    Level L;
    L.ideal = pieces.size() == 1 ? pieces[0] : intersect(pieces, X.ring);
    L.top = spec_of(pieces[0]);
    L.lower.assign(pieces.begin() + 1, pieces.end());
    L.smooth = smooth_locus(L.top, cfg, rng);
    const std::size_t i = S.levels.size();

    if (mode == FiltrationMode::Partial) {
      long rank = static_cast<long>(L.dim()) < m ? 0 : generic_rank({L.top, L.smooth.jacobian()}, L.smooth.comb.G, f);
      L.rank = rank;
      long tail_rank = rank;
      if (rank < m) {
        for (const auto& low : L.lower) {
          const VarietySpec ls = spec_of(low);
          if (static_cast<long>(ls.dim()) < m) continue;
          const SmoothLocus sl = smooth_locus(ls, cfg, rng);
          tail_rank = std::max(tail_rank, generic_rank({ls, sl.jacobian()}, sl.comb.G, f));
        }
      }
      if (tail_rank < m) {
        S.tail = L.ideal;
        S.tail_rank = tail_rank;
        break;
      }
    }

    for (std::size_t j = 0; j < i; ++j) {
      const Level& big = S.levels[j];
      PairContext ctx{big.top, big.smooth.comb.G, L.top.ideal, L.smooth.jacobian()};
      Ideal W = mode == FiltrationMode::Full ? whitney_b_failure_locus(ctx)
                                             : partial_failure_locus(ctx, f, L.smooth.comb.G);
      L.failures.push_back(W);
    }
    std::vector<Ideal> avoid;
    for (const auto& W : L.failures)
      if (!W.is_unit()) avoid.push_back(W);
    for (const auto& low : L.lower) {
      Ideal meet = L.top.ideal + low;
      if (!meet.is_unit()) avoid.push_back(meet);
    }
    if (!avoid.empty()) L.avoid = avoid.size() == 1 ? avoid[0] : intersect(avoid, X.ring);
    L.localizer = localizer_for(L.top, L.smooth, L.avoid, cfg, rng);
    L.P = L.smooth.jacobian() * L.localizer.H;
    L.degree_bound = static_cast<long>(L.top.codim) * (L.top.degree_bound - 1) + L.localizer.degree_bound;

    std::vector<Ideal> next_parts{L.top.ideal.with({L.P})};
    next_parts.insert(next_parts.end(), L.lower.begin(), L.lower.end());
    Ideal next = next_parts.size() == 1 ? next_parts[0] : intersect(next_parts, X.ring);
    const long dn = dimension(next);
    if (dn >= static_cast<long>(L.dim()))
      throw std::logic_error("filtration did not decrease in dimension");
    S.levels.push_back(std::move(L));
    current = std::move(next);
  }
  return S;
}

}  // namespace affstrat
