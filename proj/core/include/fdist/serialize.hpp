#pragma once

#include "fdist/bound_ledger.hpp"
#include "fdist/chromatic.hpp"
#include "fdist/constructions.hpp"
#include "fdist/extremal.hpp"
#include "fdist/line_scheme.hpp"

#include <nlohmann/json.hpp>

namespace fdist {

using Json = nlohmann::json;

Json to_json(const Coloring& c);
/// {"chi": c, "coloring": [...], "certificate": {"type": "clique"|"search", ...},
///  "nodes_explored": n}
Json to_json(const ChromaticResult& r);
/// {"bipartite": true, "sides": [[...], [...]]} or
/// {"bipartite": false, "odd_cycle": [...]}
Json to_json(const BipartitionResult& r);
/// {"violations": [...], "samples": n, "boundary_points": m}
Json to_json(const LineVerificationReport& r);
Json to_json(const KDistanceSetResult& r);
Json to_json(const CliqueResult& r);
Json to_json(const ParitySolution& s);
Json to_json(const ParityVerdict& v);
/// {"space": ..., "k": k, "lower": {"value": v, "certificate": ...},
///  "upper": {...}, "strategy": ..., "concluded": v|null, "notes": [...]}
Json to_json(const BoundLedger& ledger, const DistanceClassMatrix* m = nullptr);

std::string_view to_string(LedgerCertificate::Kind kind);

}  // namespace fdist
