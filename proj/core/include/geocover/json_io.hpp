#pragma once

// JSON documents for every artifact the tools exchange. Output is compact,
// one document per line, with keys in a fixed order, so equal values give
// byte-identical text.

#include <string>
#include <string_view>

#include "geocover/bounds_lab.hpp"
#include "geocover/clique_cover.hpp"
#include "geocover/covers.hpp"
#include "geocover/oracle.hpp"
#include "geocover/pipeline.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

/// {"n", "provenance", "points": [[x,y],...], "groups": ["A",...]?}
std::string to_json(const PointSet& ps);
/// Throws InputError on malformed documents.
PointSet pointset_from_json(std::string_view text);

/// {"pointset_hash", "pieces": [{"kind", "vertices"|"edges", "witness"?, "block"?}],
/// "blocks"?, "stats"?}
std::string to_json(const Cover& cover, const CoverStats* stats = nullptr, const std::string& algorithm = "");
Cover cover_from_json(std::string_view text);

std::string to_json(const VerificationReport& report);

std::string to_json(const LowerBoundCertificate& cert, const ConditionReport* conditions = nullptr);
LowerBoundCertificate certificate_from_json(std::string_view text);

std::string to_json(const OracleResult& result);
OracleResult oracle_result_from_json(std::string_view text);

std::string to_json(const PackingPlan& plan);

/// Whole-file helpers; throw InputError when the file cannot be read or
/// written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace geocover
