#include "sk/json_io.hpp"

namespace sk {

using nlohmann::json;

json to_json(const Dyadic& d) {
    return json{{"exact", d.str()}, {"approx", d.to_double()}};
}

json to_json(const ExactRatio& r) {
    const auto [num, den] = r.canonical();
    return json{{"num", num.get_str()}, {"den", den.get_str()}, {"approx", r.to_double()}};
}

json to_json(const Point& p) {
    return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

json to_json(const QuadDyadic& q) {
    return json{{"a", q.a.str()}, {"b", q.b.str()}, {"approx", q.to_double()}};
}

json to_json(const SlrWitness& w) {
    return json{{"t1", to_json(w.t1)}, {"t2", to_json(w.t2)}, {"value", to_json(w.value)}};
}

json to_json(const LocalityReport& report) {
    json out{{"depth", report.depth},
             {"attained_max", to_json(report.attained_max)},
             {"witness", to_json(report.witness)}};
    if (report.certified_upper) out["certified_upper"] = to_json(*report.certified_upper);
    return out;
}

json to_json(const AngleTriple& triple) {
    const char* angle = "right";
    if (triple.angle_class == AngleClass::AcuteAtMiddle) angle = "acute";
    if (triple.angle_class == AngleClass::ObtuseAtMiddle) angle = "obtuse";
    return json{{"d12_sq", to_json(triple.d12_sq)},   {"d23_sq", to_json(triple.d23_sq)},
                {"d13_sq", to_json(triple.d13_sq)},   {"slr12", to_json(triple.slr12)},
                {"slr23", to_json(triple.slr23)},     {"slr13", to_json(triple.slr13)},
                {"angle_at_middle", angle},           {"split_inequality_holds", triple.lemma_holds}};
}

json to_json(const OrientedFraction& f) {
    return json{{"order", f.order},
                {"index", f.index},
                {"entry", to_json(f.entry)},
                {"right_angle", to_json(f.right_angle)},
                {"exit", to_json(f.exit)},
                {"time_start", to_json(f.time_start())},
                {"time_end", to_json(f.time_end())}};
}

json to_json(const FractionMetrics& m) {
    return json{{"leg_sq", to_json(m.leg_sq)},
                {"hyp_sq", to_json(m.hyp_sq)},
                {"slr_across", to_json(m.slr_across)}};
}

json to_json(const Isometry& iso) {
    return json{{"matrix",
                 json::array({json::array({to_json(iso.m[0][0]), to_json(iso.m[0][1])}),
                              json::array({to_json(iso.m[1][0]), to_json(iso.m[1][1])})})},
                {"translation", json::array({to_json(iso.tx), to_json(iso.ty)})}};
}

json to_json(const Verdict& verdict) {
    json out{{"pass", verdict.pass}, {"statement", verdict.statement}};
    if (verdict.failed_check) {
        out["failed_check"] = check_name(*verdict.failed_check);
        out["first_violation"] = verdict.first_violation;
    }
    if (verdict.isometry) out["isometry"] = to_json(*verdict.isometry);
    return out;
}

}  // namespace sk
