#include "folia/basic_space.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/modp.hpp"
#include "folia/rng.hpp"

namespace folia {

namespace {

// Rank of an exponent vector in the MonomialBasis enumeration (first
// variable exponent descending, recursively).
class MonoRanker {
 public:
  MonoRanker(std::size_t vars, int degree) : vars_(vars) {
    cnt_.assign(vars + 1, std::vector<std::size_t>(degree + 1, 0));
    for (std::size_t v = 0; v <= vars; ++v)
      for (int r = 0; r <= degree; ++r) cnt_[v][r] = monomial_count(v, r);
  }

  std::size_t rank(const Expo& e, int degree) const {
    std::size_t idx = 0;
    int r = degree;
    for (std::size_t i = 0; i + 1 < vars_; ++i) {
      for (int k = r; k > e[i]; --k) idx += cnt_[vars_ - i - 1][r - k];
      r -= e[i];
    }
    return idx;
  }

 private:
  std::size_t vars_;
  std::vector<std::vector<std::size_t>> cnt_;
};

struct BlockPartition {
  std::size_t groups = 1;
  std::vector<std::size_t> var_group;           // var -> group
  std::vector<std::size_t> block_of;            // monomial -> block id
  std::vector<std::vector<std::size_t>> cols;   // block id -> global monomial ids
  std::vector<std::vector<int>> sigs;           // block id -> multidegree
  std::map<std::vector<int>, std::size_t> sig_id;

  BlockPartition(const FoliationModel& m, const MonomialBasis& mb) {
    var_group.assign(m.dim, 0);
    bool valid = !m.grading_blocks.empty();
    if (valid) {
      std::vector<bool> seen(m.dim, false);
      for (std::size_t g = 0; g < m.grading_blocks.size(); ++g)
        for (auto v : m.grading_blocks[g]) {
          if (v >= m.dim || seen[v]) { valid = false; break; }
          seen[v] = true;
          var_group[v] = g;
        }
      for (bool s : seen) valid = valid && s;
    }
    groups = valid ? m.grading_blocks.size() : 1;
    if (!valid) var_group.assign(m.dim, 0);

    block_of.resize(mb.size());
    for (std::size_t i = 0; i < mb.size(); ++i) {
      std::vector<int> sig(groups, 0);
      const Expo& e = mb.at(i);
      for (std::size_t v = 0; v < m.dim; ++v) sig[var_group[v]] += e[v];
      auto [it, fresh] = sig_id.emplace(sig, cols.size());
      if (fresh) {
        cols.push_back({});
        sigs.push_back(it->first);
      }
      block_of[i] = it->second;
      cols[it->second].push_back(i);
    }
  }
};

// signed coordinate permutation (sigma x)_i = sign[i] * x_{perm[i]};
// ok = false if the matrix is not of that shape
struct SignedPerm {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
  bool ok = false;
};

SignedPerm signed_perm_of(const Matrix& g) {
  SignedPerm sp;
  std::size_t n = g.rows();
  if (g.cols() != n) return sp;
  sp.perm.assign(n, 0);
  sp.sign.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = g.at(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1) return sp;
      sp.perm[i] = j;
      sp.sign[i] = v == 1 ? 1 : -1;
      ++hits;
    }
    if (hits != 1) return sp;
  }
  sp.ok = true;
  return sp;
}

// Fixed exact constraint rows of one block: the Lie-derivation rows of a
// linear oracle and the invariance rows of the discrete maps. Rows are
// block-local dense vectors.
std::vector<VecR> fixed_block_rows(const FoliationModel& m, const MonomialBasis& mb,
                                   const MonoRanker& ranker,
                                   const std::vector<std::size_t>& cols,
                                   const std::vector<std::size_t>& local_of) {
  int d = mb.degree();
  std::vector<VecR> out;

  // Lie derivation rows: coefficient of x^beta in f -> <grad f, Xx>,
  // one constraint row per output monomial beta, per X
  for (const auto& x : m.lie_basis) {
    std::map<std::size_t, VecR> xrows;  // beta (global) -> row over block cols
    for (std::size_t a = 0; a < cols.size(); ++a) {
      const Expo& e = mb.at(cols[a]);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        for (std::size_t jj = 0; jj < e.size(); ++jj) {
          const Rat& xij = x.at(i, jj);
          if (xij == 0) continue;
          Expo b = e;
          b[i] -= 1;
          b[jj] += 1;
          std::size_t beta = ranker.rank(b, d);
          auto it = xrows.find(beta);
          if (it == xrows.end())
            it = xrows.emplace(beta, VecR(cols.size(), Rat(0))).first;
          it->second[a] += Rat(int(e[i])) * xij;
        }
      }
    }
    for (auto& [beta, r] : xrows) out.push_back(std::move(r));
  }

  // invariance rows f(gx) = f(x) of the discrete leaf-preserving maps
  for (const auto& g : m.discrete_maps) {
    for (std::size_t a = 0; a < cols.size(); ++a) {
      Polynomial mono = Polynomial::monomial(mb.at(cols[a]), Rat(1));
      Polynomial diff = pullback(mono, g) - mono;
      if (diff.is_zero()) continue;
      VecR r(cols.size(), Rat(0));
      for (const auto& [e, c] : diff.terms()) {
        std::size_t beta = ranker.rank(e, d);
        auto it = std::lower_bound(cols.begin(), cols.end(), beta);
        if (it == cols.end() || *it != beta)
          throw Error("basic_space: discrete map does not preserve the grading");
        r[local_of[beta]] += c;
      }
      bool nz = false;
      for (const auto& v : r)
        if (v != 0) { nz = true; break; }
      if (nz) out.push_back(std::move(r));
    }
  }
  return out;
}

// primitive integer form of a rational vector: scaled by the denominator
// lcm and divided by the content, which keeps sampled tangent rows small
std::vector<mpz_class> integer_primitive(const VecR& v) {
  mpz_class lcm = 1;
  for (const auto& q : v) {
    mpz_class den = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> out(v.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class s = v[i] * lcm;
    out[i] = s.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& z : out) z /= content;
  return out;
}

std::vector<long long> modp_reduced(const std::vector<mpz_class>& v, long long p) {
  std::vector<long long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v[i].get_mpz_t(), (unsigned long)p);
    out[i] = r.get_si();
  }
  return out;
}

struct SampleRows {
  std::size_t samples = 0;
  Rng rng;
  explicit SampleRows(std::uint64_t seed) : rng(seed) {}

  // one sample: x with small coordinates, tangent vectors as primitive
  // integer vectors
  bool next(const FoliationModel& m, VecR& x,
            std::vector<std::vector<mpz_class>>& ts) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      bool nzx = false;
      x.assign(m.dim, Rat(0));
      for (auto& c : x) {
        c = Rat(rng.uniform(-3, 3));
        if (c != 0) nzx = true;
      }
      if (!nzx) continue;
      auto tangents = m.oracle(x);
      ++samples;
      ts.clear();
      for (const auto& t : tangents) {
        bool nz = false;
        for (const auto& q : t)
          if (q != 0) { nz = true; break; }
        if (nz) ts.push_back(integer_primitive(t));
      }
      if (!ts.empty() || tangents.empty()) return true;
    }
    return false;
  }
};

}  // namespace

BasicSpace basic_space(const FoliationModel& m, int d, const BasicOptions& opt) {
  if (d < 0) throw InvalidParams("basic_space: negative degree");
  BasicSpace res{d, GradedSubspace(m.dim, d), 0, false};
  if (d == 0) {
    res.space.insert(Polynomial::constant(m.dim, Rat(1)));
    return res;
  }
  const MonomialBasis& mb = res.space.monomials();
  const std::size_t big_m = mb.size();
  MonoRanker ranker(m.dim, d);
  BlockPartition part(m, mb);

  // local index of a global monomial within its block
  std::vector<std::size_t> local_of(big_m, 0);
  for (const auto& blockcols : part.cols)
    for (std::size_t a = 0; a < blockcols.size(); ++a) local_of[blockcols[a]] = a;

  // lazily computed generated span (certified path only)
  std::optional<GradedSubspace> gen;
  auto generated = [&]() -> const GradedSubspace& {
    if (!gen) gen.emplace(graded_span(m.generators, d));
    return *gen;
  };

  MonoRanker ranker_lo(m.dim, d > 0 ? d - 1 : 0);
  const bool need_samples = !m.oracle_is_linear;
  const std::size_t mlo = need_samples ? monomial_count(m.dim, d - 1) : 0;
  const MonomialBasis mb_lo =
      need_samples ? MonomialBasis(m.dim, d - 1) : MonomialBasis(0, 0);

  // signed-permutation block symmetries identify mirrored blocks: once a
  // block is solved, its images under the swaps are pullbacks
  std::vector<SignedPerm> swaps;
  for (const auto& g : m.block_swaps) {
    SignedPerm sp = signed_perm_of(g);
    if (sp.ok) swaps.push_back(std::move(sp));
  }
  std::vector<std::vector<SparseRow>> block_rows(part.cols.size());
  std::vector<char> done(part.cols.size(), 0);

  auto pullback_row = [&](const SparseRow& row, const SignedPerm& sp) {
    SparseRow nr;
    nr.reserve(row.size());
    for (const auto& [idx, c] : row) {
      const Expo& a = mb.at(idx);
      Expo bx(m.dim, 0);
      int sgn = 1;
      for (std::size_t i = 0; i < m.dim; ++i) {
        if (a[i] == 0) continue;
        bx[sp.perm[i]] += a[i];
        if (sp.sign[i] < 0 && (a[i] & 1)) sgn = -sgn;
      }
      nr.emplace_back(std::uint32_t(ranker.rank(bx, d)), sgn < 0 ? Rat(-c) : c);
    }
    std::sort(nr.begin(), nr.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return nr;
  };
  auto propagate = [&](std::size_t b0) {
    std::vector<std::size_t> queue{b0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t cur = queue[head];
      for (const auto& sp : swaps) {
        if (part.cols[cur].empty()) continue;
        // image block from a representative monomial
        const Expo& rep = mb.at(part.cols[cur][0]);
        Expo img(m.dim, 0);
        for (std::size_t i = 0; i < m.dim; ++i) img[sp.perm[i]] += rep[i];
        std::size_t tb = part.block_of[ranker.rank(img, d)];
        if (done[tb]) continue;
        for (const auto& row : block_rows[cur]) {
          SparseRow nr = pullback_row(row, sp);
          block_rows[tb].push_back(nr);
          res.space.insert(std::move(nr));
        }
        done[tb] = 1;
        queue.push_back(tb);
      }
    }
  };

  for (std::size_t b = 0; b < part.cols.size(); ++b) {
    if (done[b]) continue;
    const auto& cols = part.cols[b];
    const std::size_t mcols = cols.size();
    std::vector<VecR> fixed = fixed_block_rows(m, mb, ranker, cols, local_of);

    // precompute decrement indices for sampled row generation
    // dec[a] = list of (variable i, multiplier alpha_i, rank of alpha - e_i)
    std::vector<std::vector<std::tuple<std::size_t, int, std::size_t>>> dec(mcols);
    if (need_samples) {
      for (std::size_t a = 0; a < mcols; ++a) {
        const Expo& e = mb.at(cols[a]);
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] == 0) continue;
          Expo lo = e;
          lo[i] -= 1;
          dec[a].emplace_back(i, int(e[i]), ranker_lo.rank(lo, d - 1));
        }
      }
    }

    if (mcols <= opt.modp_threshold) {
      // exact path: rational kernel of the accumulated constraint rows
      SpanTracker tracker(mcols);
      for (const auto& r : fixed) tracker.add(r);
      if (need_samples) {
        SampleRows sampler(opt.seed + 1000003 * b);
        std::size_t prev_dim = std::size_t(-1);
        while (true) {
          std::size_t added = 0;
          VecR x;
          std::vector<std::vector<mpz_class>> ts;
          while (added < std::max<std::size_t>(mcols, 16)) {
            if (sampler.samples > opt.sample_cap)
              throw NonConvergence("basic_space: sample cap exceeded");
            if (!sampler.next(m, x, ts)) break;  // oracle kept returning {}
            if (ts.empty()) { added += 1; continue; }
            // monomial values of degree d-1 at x
            VecR vals(mlo);
            for (std::size_t i = 0; i < mlo; ++i) {
              Rat v = 1;
              const Expo& e = mb_lo.at(i);
              for (std::size_t k = 0; k < e.size(); ++k)
                for (int rep = 0; rep < e[k]; ++rep) v *= x[k];
              vals[i] = v;
            }
            for (const auto& t : ts) {
              VecR row(mcols, Rat(0));
              for (std::size_t a = 0; a < mcols; ++a) {
                Rat s = 0;
                for (const auto& [i, mult, lo_idx] : dec[a])
                  if (t[i] != 0) s += Rat(mult) * Rat(t[i]) * vals[lo_idx];
                row[a] = s;
              }
              tracker.add(row);
              ++added;
            }
          }
          std::size_t dim = mcols - tracker.rank();
          if (dim == prev_dim) break;
          prev_dim = dim;
          if (dim == 0) break;
        }
        res.samples_used += sampler.samples;
      }
      std::vector<VecR> rows = tracker.rows();
      std::vector<VecR> ker = rows.empty()
                                  ? std::vector<VecR>{}
                                  : kernel_basis(Matrix::from_rows(rows));
      if (rows.empty()) {
        ker.clear();
        for (std::size_t a = 0; a < mcols; ++a) {
          VecR e(mcols, Rat(0));
          e[a] = 1;
          ker.push_back(std::move(e));
        }
      }
      for (const auto& v : ker) {
        SparseRow sr;
        for (std::size_t a = 0; a < mcols; ++a)
          if (v[a] != 0) sr.emplace_back(std::uint32_t(cols[a]), v[a]);
        block_rows[b].push_back(sr);
        res.space.insert(std::move(sr));
      }
    } else {
      // certified path: project the generated span onto the block, then
      // prove dim(kernel) <= dim(projection) by a mod-p rank bound
      res.certified = true;
      SpanTracker proj(mcols);
      std::vector<SparseRow> proj_rows;
      for (const auto& row : generated().rows()) {
        VecR v(mcols, Rat(0));
        bool any = false;
        for (const auto& [gidx, c] : row)
          if (part.block_of[gidx] == b) {
            v[local_of[gidx]] = c;
            any = true;
          }
        if (any) proj.add(v);
      }
      const std::size_t gdim = proj.rank();
      if (mcols < gdim) throw Error("basic_space: projection larger than block");
      const std::size_t target = mcols - gdim;

      ModPRank mr(mcols);
      const long long pi = 1048573;
      for (const auto& r : fixed) mr.add_row(modp_reduced(integer_primitive(r), pi));
      if (need_samples) {
        SampleRows sampler(opt.seed + 1000003 * b);
        VecR x;
        std::vector<std::vector<mpz_class>> ts;
        while (mr.rows() < target + 48) {
          if (sampler.samples > opt.sample_cap)
            throw NonConvergence("basic_space: sample cap exceeded (certified)");
          if (!sampler.next(m, x, ts)) break;
          // degree-(d-1) monomial values mod p
          std::vector<long long> vals(mlo);
          std::vector<long long> xi(m.dim);
          for (std::size_t k = 0; k < m.dim; ++k) {
            long long q = x[k].get_num().get_si() % pi;
            xi[k] = q < 0 ? q + pi : q;
          }
          for (std::size_t i = 0; i < mlo; ++i) {
            long long v = 1;
            const Expo& e = mb_lo.at(i);
            for (std::size_t k = 0; k < e.size(); ++k)
              for (int rep = 0; rep < e[k]; ++rep) v = (v * xi[k]) % pi;
            vals[i] = v;
          }
          for (const auto& t : ts) {
            std::vector<long long> ti = modp_reduced(t, pi);
            std::vector<long long> row(mcols);
            for (std::size_t a = 0; a < mcols; ++a) {
              long long s = 0;
              for (const auto& [i, mult, lo_idx] : dec[a]) {
                if (ti[i] == 0) continue;
                s = (s + (long long)mult * ti[i] % pi * vals[lo_idx]) % pi;
              }
              row[a] = s;
            }
            mr.add_row(row);
          }
        }
        res.samples_used += sampler.samples;
      }
      std::size_t got = mr.rank();
      if (got < target)
        throw NonConvergence(
            "basic_space: rank certificate failed for a block of dimension " +
            std::to_string(mcols) + " (rank " + std::to_string(got) + ", needed " +
            std::to_string(target) +
            "); either sampling is degenerate or the basic space genuinely "
            "exceeds the generated span here");
      for (const auto& v : proj.rows()) {
        SparseRow sr;
        for (std::size_t a = 0; a < mcols; ++a)
          if (v[a] != 0) sr.emplace_back(std::uint32_t(cols[a]), v[a]);
        block_rows[b].push_back(sr);
        res.space.insert(std::move(sr));
      }
    }
    done[b] = 1;
    propagate(b);
  }
  return res;
}

F2Result f2(const FoliationModel& m, const BasicOptions& opt) {
  BasicSpace b2 = basic_space(m, 2, opt);
  std::vector<Matrix> hess;
  for (const auto& f : b2.space.basis_polynomials()) hess.push_back(hessian_half(f));
  JordanAlgebra algebra = JordanAlgebra::close(hess);
  if (algebra.dim() != b2.space.dim())
    throw Error("f2: degree-2 basic space is not closed under the Jordan product "
                "(dim " + std::to_string(b2.space.dim()) + " grew to " +
                std::to_string(algebra.dim()) + ")");
  auto factors = decompose(algebra, opt.tol, opt.seed);
  return {std::move(b2.space), std::move(algebra), std::move(factors)};
}

std::vector<FftRow> fft_check(const FoliationModel& m, int dmax, const BasicOptions& opt) {
  if (dmax > opt.degree_cap)
    throw InvalidParams("fft_check: dmax exceeds the configured degree cap");
  if (m.dim > opt.ambient_cap)
    throw InvalidParams("fft_check: ambient dimension exceeds the configured cap");
  std::vector<FftRow> rows;
  for (int d = 1; d <= dmax; ++d) {
    FftRow r;
    r.degree = d;
    r.generated = graded_span(m.generators, d).dim();
    r.basic = basic_space(m, d, opt).space.dim();
    r.equal = r.generated == r.basic;
    rows.push_back(r);
  }
  return rows;
}

Polynomial reynolds(const std::vector<Matrix>& group_generators, const Polynomial& f,
                    std::size_t order_cap) {
  std::size_t n = f.vars();
  for (const auto& g : group_generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("reynolds");
    if (!(g.transpose() * g == Matrix::identity(n)))
      throw InvalidParams("reynolds: generator not orthogonal");
  }
  std::map<VecR, Matrix> seen;
  std::vector<Matrix> queue = {Matrix::identity(n)};
  seen.emplace(queue[0].flatten(), queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Matrix cur = queue[head];
    for (const auto& g : group_generators) {
      Matrix nxt = cur * g;
      VecR key = nxt.flatten();
      if (seen.count(key)) continue;
      if (seen.size() >= order_cap)
        throw GroupTooLarge("reynolds: group order exceeds cap " +
                            std::to_string(order_cap));
      seen.emplace(std::move(key), nxt);
      queue.push_back(std::move(nxt));
    }
  }
  Polynomial sum(n);
  for (const auto& [key, g] : seen) sum = sum + pullback(f, g);
  return sum.scaled(Rat(1, (unsigned long)seen.size()));
}

std::vector<Polynomial> trivial_factors(const FoliationModel& m, const BasicOptions& opt) {
  return basic_space(m, 1, opt).space.basis_polynomials();
}

InvariantSpanResult invariant_span(const FoliationModel& m,
                                   const std::vector<VecR>& points,
                                   const BasicOptions& opt) {
  SpanTracker tracker(m.dim);
  for (const auto& p : points) tracker.add(p);
  InvariantSpanResult out;
  out.basis = tracker.rows();
  Polynomial dist = idempotent_from_subspace(out.basis, m.dim);
  if (dist.is_zero()) {
    out.verified = true;  // W = V
  } else {
    out.verified = basic_space(m, 2, opt).space.member(dist);
  }
  return out;
}

}  // namespace folia
