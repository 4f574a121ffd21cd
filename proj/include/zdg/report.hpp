#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "zdg/bigint.hpp"
#include "zdg/counting.hpp"
#include "zdg/relations.hpp"
#include "zdg/spectra.hpp"

namespace zdg {

// Objects keep keys in insertion order.
using Json = nlohmann::ordered_json;

Json partition_json(const ZeroDivisorGraph& g, const ClassPartition& p);
Json graph_json(const ZeroDivisorGraph& g);

struct SpectrumReport {
  std::string ring;
  Relation relation = Relation::associate;
  std::string method;  // "join" or "brute"
  Flavor flavor = Flavor::adjacency;
  SpectrumMultiset spectrum;
  std::optional<SpectrumComparison> verification;  // absent when nothing was compared
};

Json spectrum_json(const SpectrumReport& r);
Json count_json(const std::string& formula, Json inputs, const BigInt& value);
Json count_json(const std::string& formula, Json inputs, Json value);
Json zn_profile_json(const ZnProfile& p);
Json boolean_skeleton_json(const BooleanSkeleton& s);
Json agreement_json(const AgreementReport& r);
Json lift_json(const LiftResult& r, std::size_t row_one_based, std::size_t m, double lambda);
Json pairing_json(const PairingReport& r);

std::string decimal(const BigInt& x);

// %.{digits}g rendering used by every CSV writer.
std::string format_sig(double v, int digits = 12);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace zdg
