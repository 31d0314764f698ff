#include "genred/isogeny.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace genred {

namespace {

// positive integer powers of p (p^0 = 1 allowed); for p = 1 only 1 itself
std::optional<unsigned long> p_power_exponent(const Int& v, const Int& p) {
    if (v <= 0) return std::nullopt;
    if (v == 1) return 0;
    if (p == 1) return std::nullopt;
    Int m = v;
    unsigned long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return m == 1 ? std::optional<unsigned long>(e) : std::nullopt;
}

constexpr unsigned long kOrderBound = 240;

}  // namespace

PIsogeny validate_isogeny(const RootDatum& source, const RootDatum& target, const Int& p, const IntMat& P,
                          const IntMat& Pcirc) {
    if (p != 1 && (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)) throw BadParams("p must be 1 or a prime");
    std::size_t n = target.rank, r = target.base_size;
    if (source.rank != n) throw MI2Violation("source and target lattices have different rank");
    if (source.base_size != r) throw MI2Violation("source and target have different base size");
    if (P.rows() != n || P.cols() != n) throw MI2Violation("P has the wrong shape");
    if (Pcirc.rows() != r || Pcirc.cols() != r) throw MI1Violation("Pcirc has the wrong shape");

    PIsogeny f{source, target, p, P, Pcirc};

    // (MI1): monomial, entries powers of p
    f.dagger.assign(r, r);
    f.q_base.assign(r, Int(0));
    std::vector<bool> col_used(r, false);
    for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t t = 0; t < r; ++t) {
            const Int& e = Pcirc.at(s, t);
            if (e == 0) continue;
            if (f.dagger[s] != r) throw MI1Violation("row " + std::to_string(s) + " has two nonzero entries");
            if (col_used[t]) throw MI1Violation("column " + std::to_string(t) + " has two nonzero entries");
            if (!p_power_exponent(e, p)) throw MI1Violation("entry " + e.get_str() + " is not a power of p");
            f.dagger[s] = t;
            f.q_base[s] = e;
            col_used[t] = true;
        }
        if (f.dagger[s] == r) throw MI1Violation("row " + std::to_string(s) + " is zero");
    }

    // (MI2)
    if (P.det() == 0) throw MI2Violation("det P = 0");
    if (P * source.A.transpose() != target.A.transpose() * Pcirc)
        throw MI2Violation("P*B^tr != A^tr*Pcirc");
    if (Pcirc * source.Acheck != target.Acheck * P) throw MI2Violation("Pcirc*Bcheck != Acheck*P");

    // consequence: C*Pcirc = Pcirc*C'
    if (target.cartan.entries() * Pcirc != Pcirc * source.cartan.entries())
        throw MI2Violation("C*Pcirc != Pcirc*C'");

    f.sigma = f.dagger;

    // root exponents: q_alpha = q_s for alpha = w(alpha_s); well-definedness is
    // checked by transporting along every generator
    f.q_roots.resize(target.roots.size());
    for (std::size_t i = 0; i < target.roots.size(); ++i) f.q_roots[i] = f.q_base[target.root_base_index[i]];
    for (std::size_t i = 0; i < target.roots.size(); ++i)
        for (std::size_t t = 0; t < r; ++t) {
            auto j = target.root_index(target.weyl_gens[t].apply(target.roots[i]));
            if (!j) throw ConsistencyFailure("roots not closed under generators");
            if (f.q_roots[*j] != f.q_roots[i]) throw MI2Violation("root exponents not constant on a Weyl orbit");
        }

    // MstdcalC compatibility: q_t c_st = q_s c_{sdag tdag}
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t) {
            if (f.q_base[t] * target.cartan.c(s, t) !=
                f.q_base[s] * source.cartan.c(f.dagger[s], f.dagger[t]))
                throw MI2Violation("q_t*c_st != q_s*c'_{sdag,tdag}");
        }

    // phi . sigma(w) = w . phi on generators
    for (std::size_t s = 0; s < r; ++s) {
        if (P * source.weyl_gens[f.sigma[s]] != target.weyl_gens[s] * P)
            throw ConsistencyFailure("phi does not intertwine w_s with w_{sdag}");
    }
    return f;
}

std::vector<std::size_t> induced_sigma(const PIsogeny& f) {
    for (std::size_t s = 0; s < f.target.base_size; ++s) {
        if (f.P * f.source.weyl_gens[f.sigma[s]] != f.target.weyl_gens[s] * f.P)
            throw ConsistencyFailure("phi does not intertwine w_s with w_{sdag}");
    }
    return f.sigma;
}

IsogenyClassification classify_isogeny(const PIsogeny& f) {
    IsogenyClassification out;
    out.central = std::all_of(f.q_roots.begin(), f.q_roots.end(), [](const Int& q) { return q == 1; });
    Int dp = f.P.det();
    out.isomorphism = out.central && (dp == 1 || dp == -1);

    // endo-only fields stay unset for a cross-datum isogeny
    if (!f.is_endo()) return out;

    std::size_t n = f.target.rank;

    // ordinariness / twist from the base permutation
    bool untwisted = true;
    bool ordinary = true;
    for (std::size_t s = 0; s < f.dagger.size(); ++s) {
        if (f.dagger[s] != s) untwisted = false;
    }
    // orbits of dagger; within an orbit, distinct s,t must have m_st in {2,3}
    {
        std::size_t r = f.dagger.size();
        std::vector<int> orbit(r, -1);
        int next_orbit = 0;
        for (std::size_t s = 0; s < r; ++s) {
            if (orbit[s] >= 0) continue;
            std::size_t cur = s;
            while (orbit[cur] < 0) {
                orbit[cur] = next_orbit;
                cur = f.dagger[cur];
            }
            ++next_orbit;
        }
        for (std::size_t s = 0; s < r && ordinary; ++s)
            for (std::size_t t = s + 1; t < r && ordinary; ++t) {
                if (orbit[s] != orbit[t]) continue;
                Int prod = f.target.cartan.c(s, t) * f.target.cartan.c(t, s);
                if (prod != 0 && prod != 1) ordinary = false;
            }
    }
    out.ordinary = ordinary;
    out.twist = untwisted ? TwistKind::Untwisted : (ordinary ? TwistKind::Twisted : TwistKind::VeryTwisted);

    // Steinberg: P^d = p^m I for some d <= bound, m >= 1
    if (f.p != 1) {
        IntMat power = IntMat::identity(n);
        for (unsigned long d = 1; d <= kOrderBound; ++d) {
            power = power * f.P;
            Int c;
            if (power.is_scalar(c) && c > 0) {
                auto m = p_power_exponent(c, f.p);
                if (m && *m >= 1) {
                    out.steinberg = {d, *m};
                    break;
                }
            }
        }
    }

    // q = |det P|^(1/n) as an exponent pair, and as a QuadNum when den | 2
    Int adet = abs(dp);
    auto e = p_power_exponent(adet, f.p);
    if (out.steinberg && e) {
        unsigned long num = *e, den = static_cast<unsigned long>(n);
        unsigned long g = std::gcd(num, den);
        num /= g;
        den /= g;
        out.q_exponent = {Int(static_cast<long>(num)), den};
        if (den == 1) {
            Int q;
            mpz_pow_ui(q.get_mpz_t(), f.p.get_mpz_t(), num);
            out.q = QuadNum(q);
        } else if (den == 2) {
            Int half;
            mpz_pow_ui(half.get_mpz_t(), f.p.get_mpz_t(), num / 2);
            long pl = f.p.get_si();
            out.q = (num % 2 == 0) ? QuadNum(half) : QuadNum(Int(0), half, pl, Int(1));
        }
        if (out.q) {
            // q^{|S_i|} = prod of the q_s over each dagger-orbit
            std::vector<bool> seen(f.dagger.size(), false);
            for (std::size_t s = 0; s < f.dagger.size(); ++s) {
                if (seen[s]) continue;
                QuadNum prod(1);
                std::size_t cur = s, len = 0;
                while (!seen[cur]) {
                    seen[cur] = true;
                    prod *= QuadNum(f.q_base[cur]);
                    cur = f.dagger[cur];
                    ++len;
                }
                if (prod != qn_pow(*out.q, len))
                    throw ConsistencyFailure("q^{|S_i|} != prod of the orbit's root exponents");
            }
        }
    } else {
        out.q_exponent = {Int(0), 1};
    }

    // Frobenius: all q_alpha equal p^m (m >= 1) and p^-m P integral of finite
    // order permuting R and R^vee
    if (f.p != 1 && !f.q_base.empty()) {
        bool all_equal = std::all_of(f.q_base.begin(), f.q_base.end(),
                                     [&](const Int& q) { return q == f.q_base[0]; });
        auto m = p_power_exponent(f.q_base[0], f.p);
        if (all_equal && m && *m >= 1) {
            Int scale;
            mpz_pow_ui(scale.get_mpz_t(), f.p.get_mpz_t(), *m);
            bool integral = true;
            IntMat phi0(n, n);
            for (std::size_t i = 0; i < n && integral; ++i)
                for (std::size_t j = 0; j < n && integral; ++j) {
                    if (f.P.at(i, j) % scale != 0)
                        integral = false;
                    else
                        phi0.at(i, j) = f.P.at(i, j) / scale;
                }
            if (integral) {
                // finite order
                bool finite = false;
                IntMat power = IntMat::identity(n);
                for (unsigned long d = 1; d <= kOrderBound; ++d) {
                    power = power * phi0;
                    if (power.is_identity()) {
                        finite = true;
                        break;
                    }
                }
                if (finite) {
                    bool permutes = true;
                    IntMat phi0t = phi0.transpose();
                    for (std::size_t i = 0; i < f.target.roots.size() && permutes; ++i) {
                        if (!f.target.root_index(phi0.apply(f.target.roots[i]))) permutes = false;
                    }
                    for (std::size_t i = 0; i < f.target.coroots.size() && permutes; ++i) {
                        std::vector<Int> img = phi0t.apply(f.target.coroots[i]);
                        bool found = false;
                        for (const auto& cr : f.target.coroots)
                            if (cr == img) found = true;
                        if (!found) permutes = false;
                    }
                    if (permutes) out.frobenius_m = *m;
                }
            }
        }
    }
    return out;
}

MorphismCheckReport morphism_check(const RootDatum& source, const RootDatum& target, const IntMat& P, const Int& p) {
    MorphismCheckReport rep;
    if (P.rows() != target.rank || P.cols() != source.rank) throw BadParams("P has the wrong shape");

    // hom of root data: P maps R' bijectively onto R and P^tr maps R^vee
    // bijectively onto R'^vee, all multipliers 1
    rep.is_hom_of_root_data = source.roots.size() == target.roots.size();
    if (rep.is_hom_of_root_data) {
        std::set<std::size_t> hit;
        for (const auto& beta : source.roots) {
            auto idx = target.root_index(P.apply(beta));
            if (!idx || hit.count(*idx)) {
                rep.is_hom_of_root_data = false;
                break;
            }
            hit.insert(*idx);
        }
    }
    if (rep.is_hom_of_root_data) {
        IntMat Pt = P.transpose();
        std::set<std::vector<Int>> src_coroots(source.coroots.begin(), source.coroots.end());
        std::set<std::vector<Int>> images;
        for (const auto& nu : target.coroots) {
            std::vector<Int> img = Pt.apply(nu);
            if (!src_coroots.count(img) || images.count(img)) {
                rep.is_hom_of_root_data = false;
                break;
            }
            images.insert(img);
        }
    }

    CokernelInvariants ci = cokernel_invariants(P);
    rep.cokernel_invariants = ci.torsion;
    rep.is_surjective = ci.free_rank == 0 && ci.torsion.empty();

    rep.no_p_prime_torsion = center_is_connected(source, p);
    return rep;
}

RegularEmbeddingReport regular_embedding_check(const RootDatum& source, const RootDatum& target, const IntMat& P,
                                               const Int& p) {
    MorphismCheckReport m = morphism_check(source, target, P, p);
    RegularEmbeddingReport rep;
    rep.hom_of_root_data = m.is_hom_of_root_data;
    rep.surjective = m.is_surjective;
    rep.p_prime_torsion_free = m.no_p_prime_torsion;
    rep.is_regular_embedding = m.is_hom_of_root_data && m.is_surjective && m.no_p_prime_torsion;
    return rep;
}

RegularEmbedding regular_embedding_build(const RootDatum& D, const Int& p) {
    if (!D.semisimple()) throw NotSemisimple();
    std::size_t n = D.rank;

    // L_p = preimage in X of the p-primary torsion of X/ZR.
    // Diagonalize ZR: U * A^tr * V = S, then X/ZR has coordinates (U x) mod d_i
    // and L_p is spanned by U^{-1} * diag(d_i') with d_i' the p'-part of d_i.
    SmithForm sf = smith_normal_form(D.A.transpose());
    auto uinv = solve_left_integral(sf.U, IntMat::identity(n));
    if (!uinv) throw ConsistencyFailure("U not invertible");
    IntMat scaled(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Int d = sf.S.at(i, i);
        if (d == 0) throw NotSemisimple();
        Int dp = d;  // p'-part
        if (p > 1)
            while (dp % p == 0) dp /= p;
        for (std::size_t r2 = 0; r2 < n; ++r2) scaled.at(r2, i) = uinv->at(r2, i) * dp;
    }
    IntMat M = column_lattice_basis(scaled);  // basis of L_p, n x n

    // X(ambient) has basis u_j = (m_j, 0), v_i = (e_i, e_i);
    // roots (alpha, 0) have coordinates (M^{-1} alpha, 0),
    // coroots (alpha^vee, 0) have coordinates (M^tr alpha^vee, alpha^vee).
    IntMat Aamb(D.base_size, 2 * n);
    IntMat Camb(D.base_size, 2 * n);
    IntMat Mt = M.transpose();
    for (std::size_t s = 0; s < D.base_size; ++s) {
        std::vector<Rat> alpha(n);
        for (std::size_t j = 0; j < n; ++j) alpha[j] = Rat(D.A.at(s, j));
        auto sol = solve_rational(M, alpha);
        if (!sol) throw ConsistencyFailure("root not in L_p");
        for (std::size_t j = 0; j < n; ++j) {
            if ((*sol)[j].get_den() != 1) throw ConsistencyFailure("root not integral in L_p basis");
            Aamb.at(s, j) = (*sol)[j].get_num();
        }
        std::vector<Int> mtv = Mt.apply(D.Acheck.row(s));
        for (std::size_t j = 0; j < n; ++j) {
            Camb.at(s, j) = mtv[j];
            Camb.at(s, n + j) = D.Acheck.at(s, j);
        }
    }
    RootDatum ambient = build_datum(Aamb, Camb);

    // inclusion X(ambient) -> X(D): (lambda, mu) -> lambda, i.e. [M | I]
    IntMat incl(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) incl.at(i, j) = M.at(i, j);
        incl.at(i, n + i) = 1;
    }

    RegularEmbedding out{ambient, incl};
    auto rep = regular_embedding_check(ambient, D, incl, p);
    if (!rep.is_regular_embedding) throw ConsistencyFailure("constructed embedding failed its own check");
    if (!center_is_connected(ambient, p)) throw ConsistencyFailure("ambient center not connected");
    return out;
}

PIsogeny dual_morphism(const PIsogeny& f) {
    return validate_isogeny(dual_datum(f.target), dual_datum(f.source), f.p, f.P.transpose(),
                            f.Pcirc.transpose());
}

PIsogeny exceptional_catalog(ExceptionalType type, unsigned long m_or_n) {
    auto power = [](long base, unsigned long e) {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
        return r;
    };
    switch (type) {
        case ExceptionalType::C2: {
            RootDatum D = adjoint_datum(standard_cartan('C', 2));
            IntMat P(2, 2);
            P.at(0, 1) = power(2, m_or_n);
            P.at(1, 0) = power(2, m_or_n + 1);
            return validate_isogeny(D, D, Int(2), P, P);
        }
        case ExceptionalType::G2: {
            RootDatum D = adjoint_datum(standard_cartan('G', 2));
            IntMat P(2, 2);
            P.at(0, 1) = power(3, m_or_n);
            P.at(1, 0) = power(3, m_or_n + 1);
            return validate_isogeny(D, D, Int(3), P, P);
        }
        case ExceptionalType::F4: {
            RootDatum D = adjoint_datum(standard_cartan('F', 4));
            IntMat P(4, 4);
            P.at(0, 3) = power(2, m_or_n);
            P.at(1, 2) = power(2, m_or_n);
            P.at(2, 1) = power(2, m_or_n + 1);
            P.at(3, 0) = power(2, m_or_n + 1);
            return validate_isogeny(D, D, Int(2), P, P);
        }
        case ExceptionalType::BnCn: {
            unsigned long nn = m_or_n;
            if (nn < 2) throw BadType("BnCn needs n >= 2");
            RootDatum src = sc_datum(standard_cartan('B', nn));
            RootDatum tgt = sc_datum(standard_cartan('C', nn));
            IntMat P(nn, nn);
            P.at(0, 0) = 1;
            for (std::size_t i = 1; i < nn; ++i) P.at(i, i) = 2;
            return validate_isogeny(src, tgt, Int(2), P, P);
        }
    }
    throw BadType("unknown exceptional type");
}

}  // namespace genred
