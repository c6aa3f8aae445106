#pragma once

#include "json.hpp"
#include "nforge/classifier.hpp"
#include "nforge/nichols_engine.hpp"
#include "nforge/suzuki_hopf.hpp"
#include "nforge/yd_radford.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nforge::io {

using json = nlohmann::json;

inline constexpr const char* kFormat = "nichols-forge/1";
inline constexpr const char* kToolVersion = "nforge 0.1.0";

enum class OutputFormat { json, csv, markdown };
OutputFormat format_from_name(const std::string& s);  // ParseError

// Scalars cross the boundary as {"order": M, "exp": k}; values that are not roots of unity are
// written as {"order": M, "coords": ["p/q", ...]}. Anything else is rejected on input.
json scalar_to_json(const Cyc& c);
Cyc scalar_from_json(const json& j);

int sign_from_flag(const std::string& s);  // "+" / "-"
std::string flag_from_sign(int s);
json params_to_json(const SuzukiParams& p);
SuzukiParams params_from_json(const json& j);

json key_to_json(const FamilyKey& k);

json braiding_to_json(const BraidedSpace& b);
BraidedSpace braiding_from_json(const json& j);

json verdict_to_json(const DimVerdict& v);
DimVerdict verdict_from_json(const json& j);

json hopf_to_json(const HopfReport& r);
json suzuki_dump_json(const SuzukiAlgebra& a);
json yd_module_to_json(const YDModule& m);
json census_to_json(const SuzukiParams& p, const CensusCounts& c);
std::string census_markdown(const SuzukiParams& p, const CensusCounts& c);
json decomposition_to_json(const Decomposition& d);
json hilbert_to_json(const HilbertReport& r);
json cross_check_to_json(const CrossCheckReport& r);

json sweep_to_json(const std::vector<SweepRecord>& records);
// Columns k,s,t,verdict,type_tag,reason; rows sorted by (k, s, t).
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string sweep_markdown(const std::vector<SweepRecord>& records);

// 64-bit FNV-1a, hex.
std::string digest(const std::string& bytes);

struct Manifest {
    std::string command;
    json params = json::object();
    json seeds = json::object();
    std::string engine;
    std::string input_digest;
    json to_json() const;
};

// {"format", "kind", "manifest", "body"} with the body digest folded into the manifest.
json envelope(const std::string& kind, const Manifest& m, json body);

// Writes through a temporary file and a rename.
void write_atomic(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

std::string data_dir();

// Exit codes: 0 success, 2 verdict disagreement, 3 axiom failure, 4 bad input, 64 usage.
int run_command(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nforge::io
