#include "fdist/serialize.hpp"

namespace fdist {

Json to_json(const Coloring& c) { return Json(c.assignment()); }

Json to_json(const ChromaticResult& r) {
    Json cert = {{"type", r.certificate.kind == ChromaticCertificate::Kind::clique ? "clique"
                                                                                 : "search"}};
    if (r.certificate.kind == ChromaticCertificate::Kind::clique) {
        cert["vertices"] = r.certificate.clique;
    } else {
        cert["clique_bound"] = r.certificate.clique.size();
        cert["clique"] = r.certificate.clique;
    }
    return {{"chi", r.chi},
            {"coloring", to_json(r.witness)},
            {"certificate", std::move(cert)},
            {"nodes_explored", r.nodes_explored}};
}

Json to_json(const BipartitionResult& r) {
    if (const auto* sides = std::get_if<TwoSides>(&r)) {
        return {{"bipartite", true}, {"sides", {sides->left, sides->right}}};
    }
    return {{"bipartite", false}, {"odd_cycle", std::get<OddCycle>(r).vertices}};
}

Json to_json(const LineVerificationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"x", v.x.to_string()},
                              {"distance", v.distance.to_string()},
                              {"color", std::string(to_string(v.color))}});
    }
    return {{"violations", std::move(violations)},
            {"samples", r.samples},
            {"boundary_points", r.boundary_points},
            {"violation_count", r.sample_violation_count + r.sweep_violation_count}};
}

Json to_json(const KDistanceSetResult& r) {
    return {{"k", r.k},
            {"size", r.subset.size()},
            {"subset", r.subset},
            {"classes", r.classes},
            {"class_count", r.class_count()},
            {"optimal", r.optimal},
            {"nodes_explored", r.nodes_explored}};
}

Json to_json(const CliqueResult& r) {
    return {{"size", r.vertices.size()},
            {"vertices", r.vertices},
            {"optimal", r.optimal},
            {"nodes_explored", r.nodes_explored}};
}

Json to_json(const ParitySolution& s) {
    return {{"a", s.a.get_str()}, {"b", s.b.get_str()}, {"c", s.c.get_str()}};
}

Json to_json(const ParityVerdict& v) {
    return {{"a_odd", v.a_odd}, {"b_odd", v.b_odd}, {"c_odd", v.c_odd}, {"all_odd", v.all_odd()}};
}

std::string_view to_string(LedgerCertificate::Kind kind) {
    switch (kind) {
        case LedgerCertificate::Kind::clique: return "clique";
        case LedgerCertificate::Kind::k_distance_set: return "k_distance_set";
        case LedgerCertificate::Kind::search: return "search";
        case LedgerCertificate::Kind::coloring: return "coloring";
    }
    return "?";
}

namespace {

Json bound_json(const Bound& b, const DistanceClassMatrix* m) {
    const LedgerCertificate& c = b.certificate;
    Json cert = {{"type", std::string(to_string(c.kind))}, {"forbidden_classes", c.forbidden}};
    if (m != nullptr && m->has_class_table()) {
        Json squared = Json::array();
        for (ClassId id : c.forbidden) squared.push_back(m->squared_distance_of(id)->to_string());
        cert["forbidden_squared"] = std::move(squared);
    }
    if (!c.vertices.empty()) cert["vertices"] = c.vertices;
    if (c.coloring) cert["coloring"] = to_json(*c.coloring);
    if (!c.factors.empty()) cert["factors"] = c.factors;
    return {{"value", b.value}, {"certificate", std::move(cert)}};
}

}  // namespace

Json to_json(const BoundLedger& ledger, const DistanceClassMatrix* m) {
    Json out = {{"space", ledger.space}, {"k", ledger.k}, {"strategy", ledger.strategy}};
    out["lower"] = ledger.lower ? bound_json(*ledger.lower, m) : Json(nullptr);
    out["upper"] = ledger.upper ? bound_json(*ledger.upper, m) : Json(nullptr);
    const auto concluded = ledger.concluded();
    out["concluded"] = concluded ? Json(*concluded) : Json(nullptr);
    out["exhausted"] = ledger.exhausted;
    out["notes"] = ledger.notes;
    return out;
}

}  // namespace fdist
