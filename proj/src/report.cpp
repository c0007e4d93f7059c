/*
   Copyright 2026 The qfsplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qfsplit/report.hpp"

#include <algorithm>
#include <chrono>

#include "qfsplit/criteria.hpp"
#include "qfsplit/localcoh.hpp"
#include "qfsplit/poly_parse.hpp"
#include "qfsplit/splitting_oracle.hpp"
#include "qfsplit/witt.hpp"

#ifndef QFSPLIT_VERSION
#define QFSPLIT_VERSION "0.0.0"
#endif

namespace qfs {

namespace {

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument(std::string("field '") + key + "' has the wrong type");
    }
}

Json verdict_json(const Verdict& v) {
    return Json{{"f_split", v.f_split}, {"quasi2", v.quasi2}, {"height", to_string(v.height)}};
}

Json keyed_coefficients(const std::vector<std::pair<H2Key, std::uint32_t>>& list, const DoubleCover& cover) {
    Json out = Json::array();
    for (const auto& [k, c] : list) out.push_back(Json{{"class", to_string(k, cover)}, {"coefficient", c}});
    return out;
}

std::vector<std::string> hypersurface_variables(const CatalogEntry& e) {
    return e.variables.empty() ? collect_variables(e.poly) : e.variables;
}

void analyze_hypersurface(const CatalogEntry& e, const AnalysisOptions& opt, Report& r) {
    const auto ring = make_ring(e.p, hypersurface_variables(e));
    const Poly f = parse_poly(e.poly, ring);
    const Verdict v = height_search(f, opt.max_height);
    r.verdict = ReportVerdict{v.f_split, v.quasi2, to_string(v.height)};
    r.flags = v.flags;
    r.summary = summary(v);
    if (opt.explain) {
        Json in;
        in["variables"] = ring->variables();
        in["polynomial"] = to_string(f);
        in["fedder_residue"] = to_string(*v.fedder_residue);
        if (v.clause2_residue) {
            in["delta"] = to_string(delta_carry(f));
            in["clause2_residue"] = to_string(*v.clause2_residue);
        }
        r.intermediates = std::move(in);
    }
    if (opt.cross_check) {
        const bool untruncated = !in_frobenius_power_ideal(pow(f, e.p - 1), 1);
        r.cross_check = Json{{"fedder_untruncated", untruncated}};
        if (untruncated != v.f_split) {
            r.flags.push_back(flags::kCrossCheckMismatch);
            std::sort(r.flags.begin(), r.flags.end());
        }
    }
}

void analyze_doublecover_entry(const CatalogEntry& e, const AnalysisOptions& opt, Report& r) {
    const std::vector<std::string> vars = e.variables.empty() ? std::vector<std::string>{"x", "y"} : e.variables;
    const auto ring = make_ring(e.p, vars);
    const DoubleCover cover(parse_poly(e.poly, ring));

    DoubleCoverAnalysis a;
    if (opt.max_height == 1) {
        a.frobenius_socle = frobenius_h2(socle(cover), cover);
        a.verdict.add_flag(flags::kAssumedDomain);
        a.verdict.add_flag(flags::kSocleCriterion);
        a.verdict.f_split = a.verdict.quasi2 = !a.frobenius_socle.is_zero();
        a.verdict.height = a.verdict.f_split ? Height::One : Height::Unknown;
        if (!a.verdict.f_split) a.verdict.add_flag(flags::kSearchCapped);
    } else {
        a = analyze_doublecover(cover, {opt.config.candidate_slack, SplitStrategy::XFirst});
    }
    const Verdict& v = a.verdict;
    r.verdict = ReportVerdict{v.f_split, v.quasi2, to_string(v.height)};
    r.flags = v.flags;
    r.summary = summary(v);

    if (opt.explain) {
        Json in;
        in["equation"] = to_string(cover.equation());
        in["frobenius_socle"] = to_string(a.frobenius_socle, cover);
        if (a.carry) {
            in["carry"] = Json{{"z_parity", a.carry->eps},
                               {"numerator", to_string(a.carry->n)},
                               {"x_part", to_string(a.carry->x_part)},
                               {"y_part", to_string(a.carry->y_part)},
                               {"carry_polynomial", to_string(a.carry->carry)},
                               {"eta", to_string(a.carry->eta, cover)}};
        }
        if (a.membership) {
            const auto& m = *a.membership;
            in["membership"] = Json{{"member", m.member},
                                    {"bound", m.bound},
                                    {"escalations", m.escalations},
                                    {"preimage", keyed_coefficients(m.preimage, cover)},
                                    {"witness", keyed_coefficients(m.witness, cover)}};
        }
        r.intermediates = std::move(in);
    }

    if (opt.cross_check) {
        Json cc;
        const Verdict hv = quasi2_test(cover.equation());
        cc["hypersurface"] = verdict_json(hv);
        bool mismatch = hv.f_split != v.f_split;
        if (quasi_homogeneous_weights(cover.g())) {
            const OracleResult o = splitting_search_oracle(cover.g(), opt.config.truncation_degree);
            cc["oracle"] = Json{{"f_split", o.f_split},
                                {"quasi2", o.quasi2},
                                {"height", to_string(o.height)},
                                {"source_dim", o.source_dim},
                                {"target_dim", o.target_dim},
                                {"truncated", o.truncated}};
            if (opt.max_height == 2 && o.height != v.height) mismatch = true;
        } else {
            cc["oracle"] = "not-applicable";
        }
        r.cross_check = std::move(cc);
        if (mismatch) {
            r.flags.push_back(flags::kCrossCheckMismatch);
            std::sort(r.flags.begin(), r.flags.end());
        }
    }
}

}  // namespace

std::string tool_version() { return QFSPLIT_VERSION; }

std::string to_string(Kind k) { return k == Kind::Hypersurface ? "hypersurface" : "doublecover"; }

Kind kind_from_string(std::string_view s) {
    if (s == "hypersurface") return Kind::Hypersurface;
    if (s == "doublecover") return Kind::DoubleCover;
    throw InvalidArgument("unknown kind '" + std::string(s) + "'");
}

Json to_json(const CatalogEntry& e) {
    Json j{{"name", e.name}, {"p", e.p}, {"kind", to_string(e.kind)}, {"poly", e.poly}, {"tags", e.tags}};
    if (!e.variables.empty()) j["variables"] = e.variables;
    return j;
}

CatalogEntry catalog_entry_from_json(const Json& j) {
    CatalogEntry e;
    e.name = field<std::string>(j, "name");
    const auto p = field<long long>(j, "p");
    if (p < 2 || p >= kMaxPrime || !is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidArgument("p must be a prime below " + std::to_string(kMaxPrime));
    e.p = static_cast<std::uint32_t>(p);
    e.kind = kind_from_string(field<std::string>(j, "kind"));
    e.poly = field<std::string>(j, "poly");
    if (j.contains("tags")) e.tags = field<std::vector<std::string>>(j, "tags");
    if (j.contains("variables")) e.variables = field<std::vector<std::string>>(j, "variables");
    return e;
}

Json to_json(const Report& r) {
    Json j;
    j["schema_version"] = r.schema_version;
    j["tool_version"] = r.tool_version;
    j["entry"] = to_json(r.entry);
    j["status"] = r.status;
    if (r.error) j["error"] = *r.error;
    if (r.verdict) j["verdict"] = Json{{"f_split", r.verdict->f_split}, {"quasi2", r.verdict->quasi2}, {"height", r.verdict->height}};
    j["flags"] = r.flags;
    j["summary"] = r.summary;
    if (r.intermediates) j["intermediates"] = *r.intermediates;
    if (r.cross_check) j["cross_check"] = *r.cross_check;
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.schema_version = field<int>(j, "schema_version");
    r.tool_version = field<std::string>(j, "tool_version");
    r.entry = catalog_entry_from_json(field<Json>(j, "entry"));
    r.status = field<std::string>(j, "status");
    if (j.contains("error")) r.error = field<std::string>(j, "error");
    if (j.contains("verdict")) {
        const Json v = field<Json>(j, "verdict");
        r.verdict = ReportVerdict{field<bool>(v, "f_split"), field<bool>(v, "quasi2"), field<std::string>(v, "height")};
    }
    r.flags = field<std::vector<std::string>>(j, "flags");
    r.summary = field<std::string>(j, "summary");
    if (j.contains("intermediates")) r.intermediates = j.at("intermediates");
    if (j.contains("cross_check")) r.cross_check = j.at("cross_check");
    if (j.contains("timing_ms")) r.timing_ms = field<double>(j, "timing_ms");
    return r;
}

Report analyze_or_throw(const CatalogEntry& entry, const AnalysisOptions& options) {
    if (options.max_height != 1 && options.max_height != 2) throw InvalidArgument("max height must be 1 or 2");
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.tool_version = tool_version();
    r.entry = entry;
    r.status = "ok";
    if (entry.kind == Kind::Hypersurface) analyze_hypersurface(entry, options, r);
    else analyze_doublecover_entry(entry, options, r);
    if (options.timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report analyze(const CatalogEntry& entry, const AnalysisOptions& options) {
    try {
        return analyze_or_throw(entry, options);
    } catch (const Error& e) {
        Report r;
        r.tool_version = tool_version();
        r.entry = entry;
        r.status = "error";
        r.error = e.what();
        r.flags = {flags::kError};
        r.summary = std::string("error: ") + e.what();
        return r;
    }
}

}  // namespace qfs
