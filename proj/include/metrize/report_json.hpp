#pragma once

#include "metrize/audit.hpp"
#include "metrize/chain.hpp"
#include "metrize/discretize.hpp"
#include "metrize/fixpoint.hpp"
#include "metrize/space_io.hpp"

namespace metrize {

// Exact scalars travel as "p/q" strings (integers plainly); floats as
// numbers. Mirrors the space serialization, so values round-trip.
Json scalar_json(const Scalar& v);

// When points is given, witnesses name points by label; otherwise by index.
Json audit_json(const AuditReport& report, const PointSet* points = nullptr);

Json induced_json(const InducedMetricReport& report);
Json sandwich_json(const SandwichReport& report, const PointSet* points = nullptr);

Json ladder_json(const RadiiLadder& ladder);
Json chittenden_json(const ChittendenResult& result);

Json families_json(const BallFamilies& families);
BallFamilies families_from_json(const Json& j);

Json twogen_json(const TwoGenResult& result);
Json trace_json(const IterationTrace& trace);
Json coherence_json(const CoherenceReport& report);

}  // namespace metrize
