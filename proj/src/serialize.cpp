#include "lipcex/serialize.hpp"

#include <sstream>

namespace lipcex {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

ordered_json step_to_json(const StepFunction& f) {
    std::vector<double> breaks, values;
    for (const Piece& p : f.pieces()) {
        if (breaks.empty()) {
            breaks.push_back(p.lo);
        } else if (breaks.back() != p.lo) {
            values.push_back(0.0);  // interior gap
            breaks.push_back(p.lo);
        }
        values.push_back(p.value);
        breaks.push_back(p.hi);
    }
    return ordered_json{{"breaks", breaks}, {"values", values}};
}

StepFunction step_from_json(const ordered_json& j) {
    const auto breaks = j.at("breaks").get<std::vector<double>>();
    const auto values = j.at("values").get<std::vector<double>>();
    if (breaks.size() != values.size() + 1 && !(breaks.empty() && values.empty()))
        throw DomainError("step_from_json: need one more break than values");
    std::vector<Piece> pieces;
    for (size_t i = 0; i < values.size(); ++i)
        pieces.push_back(Piece{breaks[i], breaks[i + 1], values[i]});
    return StepFunction(std::move(pieces));
}

ordered_json pl_to_json(const PiecewiseLinear& f) {
    return ordered_json{{"breaks", f.breakpoints()}, {"values", f.values()}};
}

PiecewiseLinear pl_from_json(const ordered_json& j) {
    return PiecewiseLinear(j.at("breaks").get<std::vector<double>>(),
                           j.at("values").get<std::vector<double>>());
}

std::string step_to_csv(const StepFunction& f) {
    std::ostringstream os;
    os << "x,value\n";
    for (const Piece& p : f.pieces())
        os << fmt(p.lo) << ',' << fmt(p.value) << '\n'
           << fmt(p.hi) << ',' << fmt(p.value) << '\n';
    return os.str();
}

std::string pl_to_csv(const PiecewiseLinear& f) {
    std::ostringstream os;
    os << "x,value\n";
    for (size_t i = 0; i < f.size(); ++i)
        os << fmt(f.breakpoints()[i]) << ',' << fmt(f.values()[i]) << '\n';
    return os.str();
}

std::string polygon_to_csv(const Polygon& poly) {
    std::ostringstream os;
    os << "x,y\n";
    for (const auto& v : poly.vertices) os << fmt(v[0]) << ',' << fmt(v[1]) << '\n';
    return os.str();
}

ordered_json tables_to_json(const ConstructionTables& t) {
    ordered_json j;
    j["p"] = t.p;
    j["N"] = t.cap_n;
    j["w"] = t.w;
    j["n_table_max"] = t.n_table_max;
    j["m"] = t.m;
    j["h"] = t.h;
    std::vector<double> y(t.y.begin() + 1, t.y.end());
    j["y"] = y;
    j["lambda"] = t.lambda;
    return j;
}

}  // namespace lipcex
