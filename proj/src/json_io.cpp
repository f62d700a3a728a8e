#include "lambdalie/json_io.hpp"

#include "lambdalie/expr.hpp"

namespace lambdalie {

Json poly_to_json(const ParamPoly& p) {
    Json arr = Json::array();
    for (const auto& t : p.terms()) arr.push_back({t.m.exp(LAMBDA), t.m.exp(T), t.m.exp(ALPHA), t.c.get_str()});
    return arr;
}

ParamPoly poly_from_json(const Json& j) {
    std::vector<ParamPoly::Term> terms;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4) throw std::invalid_argument("polynomial term must be [el,et,ea,\"p/q\"]");
        Rational c = row[3].is_string() ? parse_rational(row[3].get<std::string>()) : Rational(row[3].get<long>());
        terms.push_back({Monomial::from_exps(row[0].get<unsigned>(), row[1].get<unsigned>(), row[2].get<unsigned>()), c});
    }
    return ParamPoly::from_terms(std::move(terms));
}

Json scalar_to_json(const ParamScalar& s) { return Json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}}; }

ParamScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return eval_scalar(j.get<std::string>());
    if (j.is_number_integer()) return ParamScalar(j.get<long>());
    ParamPoly num = poly_from_json(j.at("num"));
    ParamPoly den = j.contains("den") ? poly_from_json(j.at("den")) : ParamPoly(1);
    return ratfun_normalize(num, den);
}

}  // namespace lambdalie
