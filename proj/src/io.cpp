#include "genred/io.hpp"

namespace genred {

namespace {
const Int kJsonIntMax = (Int(1) << 53);
}

Json int_to_json(const Int& v) {
    if (abs(v) < kJsonIntMax) return Json(v.get_si());
    return Json(v.get_str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected integer or decimal string");
}

Json mat_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IntMat json_to_mat(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        std::vector<Int> r;
        for (const auto& e : row) r.push_back(json_to_int(e));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return IntMat();
    return IntMat::from_rows(rows);
}

Json datum_to_json(const RootDatum& D, const std::string& name) {
    Json j;
    if (!name.empty()) j["name"] = name;
    j["rank"] = D.rank;
    j["base_size"] = D.base_size;
    j["A"] = mat_to_json(D.A);
    j["Acheck"] = mat_to_json(D.Acheck);
    return j;
}

RootDatum json_to_datum(const Json& j) {
    if (!j.is_object()) throw ParseError("datum must be an object");
    if (j.contains("catalog")) {
        std::string name = j.at("catalog").get<std::string>();
        std::size_t param = j.at("param").get<std::size_t>();
        return catalog_datum(name, param);
    }
    if (j.contains("type")) {
        std::string type = j.at("type").get<std::string>();
        std::string form = j.value("form", "ad");
        char family = type.at(0);
        std::size_t rank = std::stoul(type.substr(1));
        CartanMatrix C = standard_cartan(family, rank);
        return form == "sc" ? sc_datum(C) : adjoint_datum(C);
    }
    if (!j.contains("A") || !j.contains("Acheck")) throw ParseError("datum needs A and Acheck");
    IntMat A = json_to_mat(j.at("A"));
    IntMat Ac = json_to_mat(j.at("Acheck"));
    std::size_t rank = j.value("rank", A.cols());
    std::size_t base = j.value("base_size", A.rows());
    if (A.rows() == 0 && rank > 0) return toric_datum(rank);
    if (A.rows() != base || A.cols() != rank) throw ParseError("datum shape fields disagree with A");
    return build_datum(A, Ac);
}

Json isogeny_to_json(const PIsogeny& f) {
    Json j;
    j["p"] = int_to_json(f.p);
    j["P"] = mat_to_json(f.P);
    j["Pcirc"] = mat_to_json(f.Pcirc);
    j["source"] = datum_to_json(f.source);
    j["target"] = datum_to_json(f.target);
    return j;
}

PIsogeny json_to_isogeny(const Json& j) {
    if (!j.is_object()) throw ParseError("isogeny must be an object");
    for (const char* key : {"p", "P", "Pcirc", "source", "target"})
        if (!j.contains(key)) throw ParseError(std::string("isogeny needs key ") + key);
    RootDatum src = json_to_datum(j.at("source"));
    RootDatum tgt = json_to_datum(j.at("target"));
    return validate_isogeny(src, tgt, json_to_int(j.at("p")), json_to_mat(j.at("P")), json_to_mat(j.at("Pcirc")));
}

Json complete_to_json(const CompleteRootDatum& crd) {
    Json j;
    j["datum"] = datum_to_json(crd.datum);
    QuadMat::Scaled s = crd.phi0.scaled();
    j["phi0_num"] = mat_to_json(s.num0);
    j["phi0_rad"] = s.p;
    j["phi0_den"] = int_to_json(s.den);
    if (!s.num1.is_zero()) j["phi0_sqrt_num"] = mat_to_json(s.num1);
    return j;
}

CompleteRootDatum json_to_complete(const Json& j) {
    if (!j.is_object()) throw ParseError("complete datum must be an object");
    if (!j.contains("datum")) throw ParseError("complete datum needs a datum");
    RootDatum D = json_to_datum(j.at("datum"));
    IntMat num0 = json_to_mat(j.at("phi0_num"));
    long rad = j.value("phi0_rad", 0L);
    Int den = j.contains("phi0_den") ? json_to_int(j.at("phi0_den")) : Int(1);
    IntMat num1(num0.rows(), num0.cols());
    if (j.contains("phi0_sqrt_num")) num1 = json_to_mat(j.at("phi0_sqrt_num"));
    if (num0.rows() != D.rank || num0.cols() != D.rank) throw ParseError("phi0 has the wrong shape");
    QuadMat phi(D.rank);
    for (std::size_t i = 0; i < D.rank; ++i)
        for (std::size_t k = 0; k < D.rank; ++k) phi.at(i, k) = QuadNum(num0.at(i, k), num1.at(i, k), rad, den);
    return make_complete(D, phi);
}

Json quadnum_to_json(const QuadNum& q) {
    Json j;
    j["a"] = int_to_json(q.a());
    if (q.b() != 0) {
        j["b"] = int_to_json(q.b());
        j["rad"] = q.radicand();
    }
    if (q.den() != 1) j["den"] = int_to_json(q.den());
    j["str"] = q.str();
    return j;
}

Json qpoly_to_json(const QPoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) {
        if (c.is_integer())
            coeffs.push_back(int_to_json(c.a()));
        else
            coeffs.push_back(quadnum_to_json(c));
    }
    Json j;
    j["coeffs_ascending"] = coeffs;
    j["str"] = f.str();
    return j;
}

QuadNum parse_q(const std::string& text) {
    // forms: "8", "2^3", "2^3/2" (meaning 2^(3/2))
    auto caret = text.find('^');
    if (caret == std::string::npos) {
        Int v(text);
        if (v <= 0) throw ParseError("q must be positive");
        return QuadNum(v);
    }
    Int base(text.substr(0, caret));
    std::string expo = text.substr(caret + 1);
    unsigned long num = 0, den = 1;
    auto slash = expo.find('/');
    if (slash == std::string::npos) {
        num = std::stoul(expo);
    } else {
        num = std::stoul(expo.substr(0, slash));
        den = std::stoul(expo.substr(slash + 1));
    }
    if (den != 1 && den != 2) throw ParseError("q exponent denominator must be 1 or 2");
    if (base <= 1) throw ParseError("q base must be > 1");
    if (den == 1) {
        Int v;
        mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), num);
        return QuadNum(v);
    }
    Int half;
    mpz_pow_ui(half.get_mpz_t(), base.get_mpz_t(), num / 2);
    if (num % 2 == 0) return QuadNum(half);
    if (!base.fits_slong_p()) throw ParseError("radicand too large");
    return QuadNum(Int(0), half, base.get_si(), Int(1));
}

std::string q_to_string(const QuadNum& q) {
    // emit p^a or p^a/2 when q is a positive power of a prime or prime^(1/2)
    auto prime_power = [](const Int& v) -> std::optional<std::pair<Int, unsigned long>> {
        if (v <= 1) return std::nullopt;
        Int m = v, p(0);
        for (Int cand(2); cand * cand <= m && cand < 100000; ++cand)
            if (m % cand == 0) {
                p = cand;
                break;
            }
        if (p == 0) {
            if (!mpz_probab_prime_p(m.get_mpz_t(), 30)) return std::nullopt;
            p = m;
        }
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) return std::nullopt;
        return std::make_pair(p, e);
    };
    if (q.is_integer()) {
        if (auto pe = prime_power(q.a())) return pe->first.get_str() + "^" + std::to_string(pe->second);
        return q.str();
    }
    if (q.a() == 0 && q.den() == 1 && q.b() > 0) {
        // q = b * sqrt(p); a prime power times sqrt(p) iff b is a power of p
        Int p(q.radicand());
        Int m = q.b();
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m == 1) return p.get_str() + "^" + std::to_string(2 * e + 1) + "/2";
    }
    return q.str();
}

}  // namespace genred
