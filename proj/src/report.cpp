#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <string>

#include "holes3d/errors.hpp"
#include "holes3d/report.hpp"

namespace holes3d {

Json rat_json(const Rat& r) {
    return Json(r.str());
}

Json vec_json(const Vec3& v) {
    return Json::array({rat_json(v.x), rat_json(v.y), rat_json(v.z)});
}

Json tagged(Json value, const std::string& provenance) {
    Json j;
    j["value"] = std::move(value);
    j["provenance"] = provenance;
    return j;
}

Json params_json(const ConstructionParams& p) {
    Json j;
    j["m"] = p.m;
    j["path_depth"] = p.path_depth;
    j["gamma_length"] = p.gamma_length;
    j["t"] = rat_json(p.t);
    j["zeta2"] = rat_json(p.zeta2);
    j["zeta3"] = rat_json(p.zeta3);
    return j;
}

Json betti_json(const BettiReport& b) {
    Json j;
    j["dimension"] = b.dimension;
    j["chain_dim"] = b.dim_c;
    j["rank_boundary"] = b.rank_d;
    j["rank_boundary_next"] = b.rank_d_next;
    j["betti"] = b.betti;
    return j;
}

Json hole_json(const HoleReport& h) {
    Json j;
    j["n"] = h.n;
    j["simplex_counts"] = h.simplex_counts;
    j["betti2"] = betti_json(h.betti2);
    j["holes"] = tagged(h.holes, "computed");
    if (h.predicted_holes) {
        j["predicted_holes"] = tagged(*h.predicted_holes, "formula");
    }
    j["bound"] = tagged(h.bound, "formula");
    j["bound_holds"] = h.bound_holds;
    return j;
}

Json epsilon_json(const EpsilonBudget& e) {
    Json j;
    j["eps1"] = rat_json(e.eps1);
    j["eps2_squared"] = rat_json(e.eps2_squared);
    j["eps"] = rat_json(e.eps);
    j["halvings"] = e.halvings;
    return j;
}

namespace {

Json claim_json(const ClaimResult& c) {
    Json j;
    j["pass"] = c.pass;
    j["failures"] = c.failures;
    return j;
}

} // namespace

Json witness_json(const WitnessReport& w) {
    Json j;
    j["claim1"] = claim_json(w.claim1);
    j["claim2"] = claim_json(w.claim2);
    j["claim3"] = claim_json(w.claim3);
    j["claim4"] = claim_json(w.claim4);
    j["all_pass"] = w.all_pass();
    return j;
}

Json oracle_json(const OracleReport& o) {
    Json j;
    j["h"] = rat_json(o.h);
    j["count_h"] = tagged(o.count_h, "oracle");
    j["count_h_half"] = tagged(o.count_h2, "oracle");
    j["stable"] = o.stable;
    j["cells_h"] = o.cells_h;
    j["cells_h_half"] = o.cells_h2;
    return j;
}

Json offsets_json(const TranslateFamily& family) {
    Json arr = Json::array();
    for (const Translate& t : family.translates) {
        Json j;
        j["label"] = t.label();
        j["offset"] = vec_json(t.offset);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json warmup_spec_json(const WarmupSpec& spec) {
    Json j;
    j["m"] = spec.m;
    j["vertices"] = Json::object();
    j["vertices"]["a"] = vec_json(spec.a);
    j["vertices"]["b"] = vec_json(spec.b);
    j["vertices"]["c"] = vec_json(spec.c);
    j["vertices"]["d"] = vec_json(spec.d);
    j["vertices"]["e"] = vec_json(spec.e);
    j["vertices"]["f"] = vec_json(spec.f);
    j["vertices"]["g"] = vec_json(spec.g);
    j["ell"] = rat_json(spec.ell);
    j["c_prime"] = vec_json(spec.c_prime);
    return j;
}

Json report_shell(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["meta"] = Json::object();
    j["meta"]["generated_at"] = iso_timestamp_utc();
    return j;
}

void CheckList::add(const std::string& name, bool pass) {
    Json j;
    j["name"] = name;
    j["pass"] = pass;
    checks_.push_back(std::move(j));
    ok_ = ok_ && pass;
}

std::string csv_header() {
    return "m,n,c2_count,c3_count,rank_d2,rank_d3,betti2,holes,bound\n";
}

std::string csv_row(long long m, const HoleReport& report) {
    const long long c2 = report.simplex_counts.size() > 2 ? report.simplex_counts[2] : 0;
    const long long c3 = report.simplex_counts.size() > 3 ? report.simplex_counts[3] : 0;
    std::string row;
    row += std::to_string(m) + ",";
    row += std::to_string(report.n) + ",";
    row += std::to_string(c2) + ",";
    row += std::to_string(c3) + ",";
    row += std::to_string(report.betti2.rank_d) + ",";
    row += std::to_string(report.betti2.rank_d_next) + ",";
    row += std::to_string(report.betti2.betti) + ",";
    row += std::to_string(report.holes) + ",";
    row += std::to_string(report.bound) + "\n";
    return row;
}

std::string iso_timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw InputError("write_text_file: cannot open " + path);
    }
    out << content;
    out.close();
    if (!out) {
        throw InputError("write_text_file: failed writing " + path);
    }
}

} // namespace holes3d
