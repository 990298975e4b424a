#include "identities.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace tglie {

namespace {

// ascending series sum_{e >= base} c[e-base] z^e; entire marks finite support
// (exact everywhere), otherwise coefficients are exact up to valid_to()
struct AscSeries {
  long long base = 0;
  std::vector<Scalar> c;
  bool entire = false;

  long long support_end() const {
    return base + static_cast<long long>(c.size()) - 1;
  }
  long long valid_to() const {
    return entire ? std::numeric_limits<long long>::max() / 4 : support_end();
  }
  Scalar at(const KFieldPtr& K, long long e) const {
    if (e < base) return Scalar::zero(K);
    if (e > valid_to())
      throw std::logic_error("series coefficient outside the exact range");
    size_t idx = static_cast<size_t>(e - base);
    return idx < c.size() ? c[idx] : Scalar::zero(K);
  }
};

AscSeries mul(const KFieldPtr& K, const AscSeries& a, const AscSeries& b,
              long long need_to) {
  AscSeries r;
  r.base = a.base + b.base;
  r.entire = a.entire && b.entire;
  long long vt;
  if (r.entire) {
    vt = a.support_end() + b.support_end();
  } else {
    vt = need_to;
    if (!a.entire) vt = std::min(vt, a.support_end() + b.base);
    if (!b.entire) vt = std::min(vt, b.support_end() + a.base);
  }
  long long len = vt - r.base + 1;
  if (len < 0) len = 0;
  r.c.assign(static_cast<size_t>(len), Scalar::zero(K));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      size_t e = i + j;
      if (e >= r.c.size()) break;
      if (b.c[j].is_zero()) continue;
      r.c[e] = r.c[e] + a.c[i] * b.c[j];
    }
  }
  return r;
}

// (1 - u z)^{power} expanded ascending in z, exact through z^{limit}
AscSeries binomial_series(const KFieldPtr& K, const Scalar& u, long long power,
                          long long limit) {
  AscSeries r;
  r.base = 0;
  if (power >= 0) {
    r.entire = true;
    r.c.assign(static_cast<size_t>(power) + 1, Scalar::zero(K));
    Scalar up = Scalar::one(K);
    Rat binom(1);
    for (long long k = 0; k <= power; ++k) {
      Scalar term = Scalar::from_rat(K, binom) * up;
      if (k % 2 == 1) term = -term;
      r.c[static_cast<size_t>(k)] = term;
      binom = binom * Rat(static_cast<long>(power - k)) /
              Rat(static_cast<long>(k + 1));
      up = up * u;
    }
  } else {
    long long f = -power;
    r.c.assign(static_cast<size_t>(std::max<long long>(limit, 0)) + 1,
               Scalar::zero(K));
    Scalar up = Scalar::one(K);
    Rat binom(1);  // C(k+f-1, f-1)
    for (long long k = 0; k <= limit; ++k) {
      r.c[static_cast<size_t>(k)] = Scalar::from_rat(K, binom) * up;
      binom = binom * Rat(static_cast<long>(k + f)) /
              Rat(static_cast<long>(k + 1));
      up = up * u;
    }
  }
  return r;
}

AscSeries monomial_series(const KFieldPtr& K, const Scalar& coeff,
                          long long expo) {
  AscSeries r;
  r.base = expo;
  r.c = {coeff};
  r.entire = true;
  return r;
}

Scalar tvar(const KFieldPtr& K, int i) {
  ExpVec e = exp_zero(K->nvars);
  e[i] = 1;
  return Scalar::s_monomial(K, e);
}

// the general reflection identity with profile entries >= -2: the difference
// of the two opposite-direction expansions of prod (1 - t_i z)^{a_i} equals
// the delta-supported sum over the negative-exponent slots
bool check_reflection(const KFieldPtr& K, const std::vector<Scalar>& t,
                      const std::vector<int>& a, long long D) {
  const int n = static_cast<int>(t.size());
  Scalar one = Scalar::one(K);
  long long slack = 2;
  for (int ai : a) slack += std::llabs(ai);

  // ascending expansion of prod (1 - t_i z)^{a_i}
  AscSeries asc = monomial_series(K, one, 0);
  for (int i = 0; i < n; ++i)
    asc = mul(K, asc, binomial_series(K, t[i], a[i], D + slack), D + slack);

  // reflected expansion: prod (1 - t_i^{-1} w)^{a_i} (-t_i)^{a_i} z^{a_i}
  // with w = z^{-1}; collect the monomial prefactor and the w-series
  AscSeries desc = monomial_series(K, one, 0);
  Scalar front = one;
  long long shift = 0;
  for (int i = 0; i < n; ++i) {
    desc = mul(K, desc, binomial_series(K, t[i].inverse(), a[i], D + slack),
               D + slack);
    Scalar f = t[i].pow(a[i]);
    if (a[i] % 2 != 0) f = -f;
    front = front * f;
    shift += a[i];
  }

  auto lhs_at = [&](long long e) {
    Scalar v = Scalar::zero(K);
    if (e >= asc.base && e <= asc.valid_to()) v = asc.at(K, e);
    long long k = shift - e;  // w-exponent of the reflected part
    if (k >= desc.base && k <= desc.valid_to()) v = v - front * desc.at(K, k);
    return v;
  };

  auto rhs_at = [&](long long e) {
    Scalar v = Scalar::zero(K);
    for (int i = 0; i < n; ++i) {
      if (a[i] != -1 && a[i] != -2) continue;
      Scalar w = one;
      for (int j = 0; j < n; ++j)
        if (j != i) w = w * (one - t[j] / t[i]).pow(a[j]);
      Scalar tp = t[i].pow(e);
      if (a[i] == -1) {
        v = v + w * tp;
      } else {
        Scalar corr = one;
        for (int j = 0; j < n; ++j)
          if (j != i)
            corr = corr + Scalar::from_rat(K, Rat(a[j])) *
                              (t[i] / t[j] - one).inverse();
        v = v + w * (Scalar::from_rat(K, Rat(static_cast<long>(e))) + corr) * tp;
      }
    }
    return v;
  };

  for (long long e = -D; e <= D; ++e)
    if (!(lhs_at(e) == rhs_at(e))) return false;
  return true;
}

}  // namespace

std::string rational_identity_name(RationalIdentity id) {
  switch (id) {
    case RationalIdentity::PfracSumS: return "pfrac-sum-s";
    case RationalIdentity::PfracSumT: return "pfrac-sum-t";
    case RationalIdentity::PfracSquareS: return "pfrac-square-s";
    case RationalIdentity::PfracSquareT: return "pfrac-square-t";
    case RationalIdentity::ProfileProdS: return "profile-prod-s";
    case RationalIdentity::ProfileProdT: return "profile-prod-t";
  }
  return "?";
}

std::string series_identity_name(SeriesIdentity id) {
  switch (id) {
    case SeriesIdentity::ProfileSeriesZ: return "profile-series-z";
    case SeriesIdentity::ProfileSeriesTZ: return "profile-series-tz";
    case SeriesIdentity::DeltaSplit: return "delta-split";
    case SeriesIdentity::DeltaEval: return "delta-eval";
    case SeriesIdentity::DDeltaEval: return "ddelta-eval";
    case SeriesIdentity::LaurentReflection: return "laurent-reflection";
    case SeriesIdentity::BivarDeltaEval: return "bivar-delta-eval";
    case SeriesIdentity::BivarDDeltaEval: return "bivar-ddelta-eval";
  }
  return "?";
}

bool verify_rational(RationalIdentity id, int n, const std::vector<int>& profile) {
  KFieldPtr K = make_kfield(2, n + 1);
  Scalar one = Scalar::one(K);
  std::vector<Scalar> t;
  for (int i = 0; i < n; ++i) t.push_back(tvar(K, i));
  Scalar s = tvar(K, n);

  auto prod_s = [&] {
    Scalar p = one;
    for (int i = 0; i < n; ++i) p = p * s / (s - t[i]);
    return p;
  };
  auto prod_t = [&] {
    Scalar p = one;
    for (int i = 0; i < n; ++i) p = p * t[i] / (s - t[i]);
    return p;
  };
  auto D_top = [&](int i) {
    Scalar p = one;
    for (int j = 0; j < n; ++j)
      if (j != i) p = p * t[i] / (t[i] - t[j]);
    return p;
  };
  auto D_bot = [&](int i) {
    Scalar p = one;
    for (int j = 0; j < n; ++j)
      if (j != i) p = p * t[j] / (t[i] - t[j]);
    return p;
  };

  switch (id) {
    case RationalIdentity::PfracSumS: {
      Scalar lhs = Scalar::zero(K);
      for (int i = 0; i < n; ++i) lhs = lhs + D_top(i) * s / (s - t[i]);
      return lhs == prod_s();
    }
    case RationalIdentity::PfracSumT: {
      Scalar lhs = Scalar::zero(K);
      for (int i = 0; i < n; ++i) lhs = lhs + D_bot(i) * t[i] / (s - t[i]);
      return lhs == prod_t();
    }
    case RationalIdentity::PfracSquareS: {
      Scalar lhs = Scalar::zero(K);
      for (int i = 0; i < n; ++i) {
        Scalar frac = s / (s - t[i]);
        lhs = lhs + D_top(i) * frac * frac;
      }
      Scalar corr = one;
      for (int j = 0; j < n; ++j) corr = corr + t[j] / (s - t[j]);
      return lhs == corr * prod_s();
    }
    case RationalIdentity::PfracSquareT: {
      Scalar lhs = Scalar::zero(K);
      for (int i = 0; i < n; ++i) {
        Scalar frac = t[i] / (s - t[i]);
        lhs = lhs + D_bot(i) * frac * frac;
      }
      Scalar corr = -one;
      for (int j = 0; j < n; ++j) corr = corr + s / (s - t[j]);
      return lhs == corr * prod_t();
    }
    case RationalIdentity::ProfileProdS:
    case RationalIdentity::ProfileProdT: {
      bool top = id == RationalIdentity::ProfileProdS;
      if (static_cast<int>(profile.size()) != n)
        throw std::invalid_argument("profile size mismatch");
      auto W = [&](int i) {
        Scalar p = one;
        for (int j = 0; j < n; ++j)
          if (j != i) {
            Scalar base = (top ? t[i] : t[j]) / (t[i] - t[j]);
            p = p * base.pow(profile[j]);
          }
        return p;
      };
      Scalar lhs;
      {
        Scalar p = one;
        for (int i = 0; i < n; ++i) {
          Scalar base = (top ? s : t[i]) / (s - t[i]);
          p = p * base.pow(profile[i]);
        }
        lhs = p;
      }
      Scalar rhs = Scalar::zero(K);
      for (int i = 0; i < n; ++i) {
        Scalar frac = (top ? s : t[i]) / (s - t[i]);
        if (profile[i] == 1) {
          rhs = rhs + W(i) * frac;
        } else {
          Scalar second = s * t[i] / ((s - t[i]) * (s - t[i]));
          Scalar corr = top ? one : -one;
          for (int j = 0; j < n; ++j)
            if (j != i)
              corr = corr + Scalar::from_rat(K, Rat(profile[j])) *
                                (top ? t[j] : t[i]) / (t[j] - t[i]);
          rhs = rhs + W(i) * (second + corr * frac);
        }
      }
      return lhs == rhs;
    }
  }
  return false;
}

namespace {

bool check_profile_series(bool top, int n, const std::vector<int>& profile,
                          long long D) {
  KFieldPtr K = make_kfield(2, n);
  Scalar one = Scalar::one(K);
  std::vector<Scalar> t;
  for (int i = 0; i < n; ++i) t.push_back(tvar(K, i));

  AscSeries lhs = monomial_series(K, one, 0);
  for (int i = 0; i < n; ++i) {
    lhs = mul(K, lhs, binomial_series(K, t[i], -profile[i], D), D);
    if (!top)
      lhs = mul(K, lhs, monomial_series(K, t[i].pow(profile[i]), profile[i]), D);
  }

  auto W = [&](int i) {
    Scalar p = one;
    for (int j = 0; j < n; ++j)
      if (j != i) {
        Scalar base = (top ? t[i] : t[j]) / (t[i] - t[j]);
        p = p * base.pow(profile[j]);
      }
    return p;
  };

  std::vector<Scalar> rhs(static_cast<size_t>(D) + 1, Scalar::zero(K));
  auto accumulate = [&](const AscSeries& s, const Scalar& w) {
    for (long long e = 0; e <= D; ++e) {
      if (e < s.base || e > s.valid_to()) continue;
      Scalar v = s.at(K, e);
      if (!v.is_zero()) rhs[static_cast<size_t>(e)] = rhs[static_cast<size_t>(e)] + v * w;
    }
  };
  for (int i = 0; i < n; ++i) {
    AscSeries lin = binomial_series(K, t[i], -1, D);
    if (!top) lin = mul(K, lin, monomial_series(K, t[i], 1), D);
    if (profile[i] == 1) {
      accumulate(lin, W(i));
    } else {
      AscSeries sq = binomial_series(K, t[i], -2, D);
      sq = mul(K, sq, monomial_series(K, t[i], 1), D);
      Scalar corr = top ? one : -one;
      for (int j = 0; j < n; ++j)
        if (j != i)
          corr = corr + Scalar::from_rat(K, Rat(profile[j])) *
                            (top ? t[j] : t[i]) / (t[j] - t[i]);
      accumulate(sq, W(i));
      accumulate(lin, W(i) * corr);
    }
  }
  for (long long e = 0; e <= D; ++e)
    if (!(lhs.at(K, e) == rhs[static_cast<size_t>(e)])) return false;
  return true;
}

}  // namespace

bool verify_series(SeriesIdentity id, int n, const std::vector<int>& profile,
                   long long window) {
  switch (id) {
    case SeriesIdentity::ProfileSeriesZ:
      return check_profile_series(true, n, profile, window);
    case SeriesIdentity::ProfileSeriesTZ:
      return check_profile_series(false, n, profile, window);
    case SeriesIdentity::DeltaSplit: {
      // the split identity is the reflection identity at negated profile
      KFieldPtr K = make_kfield(2, n);
      std::vector<Scalar> t;
      for (int i = 0; i < n; ++i) t.push_back(tvar(K, i));
      std::vector<int> neg(profile);
      for (int& x : neg) x = -x;
      return check_reflection(K, t, neg, window);
    }
    case SeriesIdentity::LaurentReflection: {
      KFieldPtr K = make_kfield(2, n);
      std::vector<Scalar> t;
      for (int i = 0; i < n; ++i) t.push_back(tvar(K, i));
      return check_reflection(K, t, profile, window);
    }
    default:
      throw std::invalid_argument("identity requires the randomized driver");
  }
}

bool verify_series_random(SeriesIdentity id, long long window, uint64_t seed,
                          int instances) {
  std::mt19937_64 rng(seed);
  KFieldPtr K = make_kfield(4, 2);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-3, 3), zp(0, 3);
  auto rand_unit = [&] {
    ExpVec e{expo(rng), expo(rng)};
    return Scalar::zeta_power(K, zp(rng)) * Scalar::s_monomial(K, e);
  };

  for (int inst = 0; inst < instances; ++inst) {
    switch (id) {
      case SeriesIdentity::DeltaEval:
      case SeriesIdentity::DDeltaEval: {
        std::map<long long, Scalar> f;
        for (int k = 0; k < 3; ++k) {
          long long e = expo(rng);
          Scalar c = Scalar::from_rat(K, Rat(coeff(rng))) *
                     Scalar::s_monomial(K, ExpVec{expo(rng), expo(rng)});
          auto it = f.find(e);
          if (it == f.end())
            f.emplace(e, c);
          else
            it->second = it->second + c;
        }
        Scalar a = rand_unit();
        long long degf = 0;
        for (const auto& [e, c] : f) degf = std::max(degf, std::llabs(e));
        Scalar fa = Scalar::zero(K), dfa = Scalar::zero(K);
        for (const auto& [e, c] : f) {
          fa = fa + c * a.pow(-e);
          dfa = dfa + c * Scalar::from_rat(K, Rat(static_cast<long>(e))) *
                          a.pow(-e);
        }
        for (long long u = -window + degf; u <= window - degf; ++u) {
          Scalar lhs = Scalar::zero(K);
          for (const auto& [e, c] : f) {
            Scalar dv = a.pow(u - e);
            if (id == SeriesIdentity::DDeltaEval)
              dv = dv * Scalar::from_rat(K, Rat(static_cast<long>(u - e)));
            lhs = lhs + c * dv;
          }
          Scalar rhs =
              id == SeriesIdentity::DeltaEval
                  ? fa * a.pow(u)
                  : fa * Scalar::from_rat(K, Rat(static_cast<long>(u))) * a.pow(u) -
                        dfa * a.pow(u);
          if (!(lhs == rhs)) return false;
        }
        break;
      }
      case SeriesIdentity::BivarDeltaEval:
      case SeriesIdentity::BivarDDeltaEval: {
        std::map<std::pair<long long, long long>, Scalar> F;
        for (int k = 0; k < 4; ++k) {
          auto key = std::make_pair<long long, long long>(expo(rng), expo(rng));
          Scalar c = Scalar::from_rat(K, Rat(coeff(rng)));
          auto it = F.find(key);
          if (it == F.end())
            F.emplace(key, c);
          else
            it->second = it->second + c;
        }
        Scalar cunit = rand_unit();
        std::map<long long, Scalar> G, DG;
        for (const auto& [pq, v] : F) {
          auto [p, qq] = pq;
          Scalar w = v * cunit.pow(qq);
          auto add = [](std::map<long long, Scalar>& mp, long long e,
                        const Scalar& x) {
            auto it = mp.find(e);
            if (it == mp.end())
              mp.emplace(e, x);
            else
              it->second = it->second + x;
          };
          add(G, p + qq, w);
          add(DG, p + qq, w * Scalar::from_rat(K, Rat(static_cast<long>(qq))));
        }
        for (long long u = -window; u <= window; ++u)
          for (long long v = -window; v <= window; ++v) {
            Scalar lhs = Scalar::zero(K);
            Scalar third = Scalar::zero(K);
            for (const auto& [pq, w] : F) {
              auto [p, qq] = pq;
              long long k = v - qq;
              if (p - k != u) continue;
              Scalar dv = cunit.pow(-k);
              if (id == SeriesIdentity::BivarDDeltaEval) {
                lhs = lhs + w * dv * Scalar::from_rat(K, Rat(static_cast<long>(k)));
                third = third +
                        w * dv * Scalar::from_rat(K, Rat(static_cast<long>(qq)));
              } else {
                lhs = lhs + w * dv;
              }
            }
            Scalar rhs = Scalar::zero(K);
            auto it = G.find(u + v);
            if (it != G.end()) {
              Scalar dv = cunit.pow(-v);
              if (id == SeriesIdentity::BivarDDeltaEval)
                dv = dv * Scalar::from_rat(K, Rat(static_cast<long>(v)));
              rhs = rhs + it->second * dv;
            }
            // the derivative correction enters with the sign matching the
            // one-variable evaluation identity
            if (id == SeriesIdentity::BivarDDeltaEval) rhs = rhs - third;
            if (!(lhs == rhs)) return false;
          }
        break;
      }
      default:
        throw std::invalid_argument("identity requires the profile driver");
    }
  }
  return true;
}

bool verify_reflection_at(const KFieldPtr& K, const std::vector<Scalar>& ts,
                          const std::vector<int>& profile, long long window) {
  return check_reflection(K, ts, profile, window);
}

bool verify_reflection_specialization(const Model& M, const IntVec& alpha,
                                      const IntVec& beta, long long window) {
  const Quadruple& q = *M.quad;
  const KFieldPtr& K = q.field();
  std::vector<Scalar> ts;
  std::vector<int> prof;
  for (int p = 1; p <= q.m(); ++p) {
    ts.push_back(Scalar::from_cyclo(K, q.omega_pow(-p)));
    long long a = dot(q.nu(alpha, p), beta);
    if (a < -2) return false;  // outside the identity's hypothesis
    prof.push_back(static_cast<int>(a));
  }
  return check_reflection(K, ts, prof, window);
}

std::optional<bool> verify_orbit_weight_sum(const Model& M, const IntVec& alpha,
                                            const IntVec& beta) {
  const Quadruple& q = *M.quad;
  const CycloFieldPtr& C = q.field()->cyclo;
  for (int r = 0; r < q.m(); ++r) {
    if (dot(q.nu(alpha, r), beta) != -2) continue;
    Cyclotomic lhs = Cyclotomic::zero(C);
    for (int p = 0; p < q.m(); ++p)
      if (p != r)
        lhs = lhs + Cyclotomic::from_rat(
                        C, Rat(static_cast<long>(dot(q.nu(alpha, p), beta))));
    Cyclotomic rhs = Cyclotomic::zero(C);
    for (int p = 1; p < q.m(); ++p) {
      IntVec v = vec_add(q.nu(alpha, r + p), q.nu(alpha, r - p));
      Cyclotomic num =
          Cyclotomic::from_rat(C, Rat(static_cast<long>(dot(v, beta))));
      Cyclotomic den = Cyclotomic::one(C) - q.omega_pow(p);
      rhs = rhs + num * den.inverse();
    }
    return lhs == rhs;
  }
  return std::nullopt;
}

}  // namespace tglie
