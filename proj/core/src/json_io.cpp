#include "qtri/json_io.hpp"

#include <stdexcept>

namespace qtri {

namespace {

Json big(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

mpz_class read_big(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Json exponents(const std::vector<std::int64_t>& e) { return Json(e); }

std::vector<std::int64_t> read_exponents(const Json& j, std::size_t size) {
    require(j.is_array() && j.size() == size, "exponent vector must have " + std::to_string(size) + " entries");
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        require(x.is_number_integer(), "exponents must be integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

}  // namespace

Json to_json(const ScalarQ& s) {
    Json out = Json::array();
    for (const auto& [k, c] : s.terms()) {
        out.push_back({k, big(c.re().get_num()), big(c.re().get_den()), big(c.im().get_num()),
                       big(c.im().get_den())});
    }
    return out;
}

ScalarQ scalar_from_json(const Json& j) {
    require(j.is_array(), "scalar must be a list of terms");
    ScalarQ out;
    for (const auto& term : j) {
        require(term.is_array() && term.size() == 5, "scalar term must be [exponent, re_num, re_den, im_num, im_den]");
        require(term[0].is_number_integer(), "q exponent must be an integer");
        const mpz_class rd = read_big(term[2]);
        const mpz_class id = read_big(term[4]);
        require(sgn(rd) != 0 && sgn(id) != 0, "zero denominator");
        out.add_term(term[0].get<std::int64_t>(),
                     GaussianRational::from_fractions(read_big(term[1]), rd, read_big(term[3]), id));
    }
    return out;
}

Json to_json(const Element& e) {
    Json out = Json::array();
    for (const auto& [m, c] : e.terms()) out.push_back({exponents(m.exponents), to_json(c)});
    return out;
}

Element element_from_json(const Json& j, const AlgebraPtr& alg) {
    require(j.is_array(), "element must be a list of terms");
    Element out(alg);
    for (const auto& term : j) {
        require(term.is_array() && term.size() == 2, "element term must be [exponent-vector, scalar]");
        Monomial m(read_exponents(term[0], alg->size()));
        require(alg->admissible(m), "negative exponent on a non-invertible generator");
        out += Element::monomial(alg, std::move(m), scalar_from_json(term[1]));
    }
    return out;
}

Json to_json(const TensorElement& t) {
    Json out = Json::array();
    for (const auto& [key, c] : t.terms()) {
        Json monos = Json::array();
        for (const auto& m : key) monos.push_back(exponents(m.exponents));
        out.push_back({monos, to_json(c)});
    }
    return out;
}

Json to_json(const QAlgebra& alg) {
    Json inv = Json::array();
    for (bool b : alg.invertibility()) inv.push_back(b);
    return {{"names", alg.names()}, {"invertible", inv}, {"M", alg.comm_matrix()}};
}

AlgebraPtr algebra_from_json(const Json& j) {
    require(j.is_object() && j.contains("names") && j.contains("M"), "algebra needs \"names\" and \"M\"");
    try {
        auto names = j.at("names").get<std::vector<std::string>>();
        std::vector<bool> inv(names.size(), false);
        if (j.contains("invertible")) inv = j.at("invertible").get<std::vector<bool>>();
        auto comm = j.at("M").get<IntMatrix>();
        return std::make_shared<const QAlgebra>(std::move(names), std::move(inv), std::move(comm));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed algebra: ") + e.what());
    }
}

Json to_json(const CheckReport& r) {
    Json out = {{"name", r.name}, {"n", r.n}, {"passed", r.passed}, {"checks", r.checks}, {"notes", r.notes}};
    if (r.witness) {
        out["witness"] = {{"label", r.witness->label}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const CenterLattice& c) {
    return {{"lattice_basis", c.lattice_basis},
            {"unit_generators", c.unit_generators},
            {"monoid_generators", c.monoid_generators},
            {"cone_violations", c.cone_violations},
            {"nontrivial", c.nontrivial()}};
}

Json to_json(const Sextuple& s) {
    return {{"l12", to_json(s.l12)}, {"l11", to_json(s.l11)}, {"l22", to_json(s.l22)},
            {"j", s.j}, {"k", s.k}, {"l", s.l}, {"text", format(s)}};
}

}  // namespace qtri
