#include "qap/reports.hpp"

namespace qap::reports {

using nlohmann::ordered_json;

ordered_json rational(const Rat& v) {
    if (fits_int64(v)) return to_int64(v);
    return to_string(v);
}

ordered_json rationals(const std::vector<Rat>& v) {
    auto arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(rational(x));
    return arr;
}

ordered_json witness(const Witness& w) {
    ordered_json j;
    j["indices"] = w.indices;
    j["inequality"] = w.inequality;
    return j;
}

ordered_json verdict(const Verdict& v) {
    ordered_json j;
    switch (v.state) {
        case Verdict::State::Yes: j["verdict"] = "yes"; break;
        case Verdict::State::No: j["verdict"] = "no"; break;
        case Verdict::State::NotApplicable: j["verdict"] = "not_applicable"; break;
    }
    if (v.witness) j["witness"] = witness(*v.witness);
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

ordered_json toeplitz_profile(const ToeplitzProfile& p) {
    ordered_json j;
    auto arr = ordered_json::array();
    for (int k = 1; k <= p.n - 1; ++k) arr.push_back(rational(p.at(k)));
    j["f"] = arr;
    j["flags"] = {{"symmetric", p.symmetric},
                  {"circulant", p.circulant},
                  {"simple", p.simple},
                  {"dw", p.dw},
                  {"up_benevolent", p.up_benevolent},
                  {"down_benevolent", p.down_benevolent}};
    return j;
}

ordered_json block_partition(const BlockPartition& p) {
    ordered_json j;
    auto blocks = ordered_json::array();
    for (auto [lo, hi] : p.blocks) blocks.push_back({lo, hi});
    j["blocks"] = blocks;
    j["cdw"] = p.is_cdw();
    return j;
}

ordered_json permutation(const Permutation& p) {
    return ordered_json(p.images());
}

ordered_json classification(const ClassificationReport& r) {
    ordered_json j;
    ordered_json classes;
    for (const auto& entry : r.entries) {
        auto v = verdict(entry.verdict);
        if (entry.name == "toeplitz" && r.toeplitz_profile) v["profile"] = toeplitz_profile(*r.toeplitz_profile);
        if (entry.name == "cut" && r.cut_partition) v["partition"] = block_partition(*r.cut_partition);
        classes[entry.name] = v;
    }
    j["classes"] = classes;
    return j;
}

ordered_json conic_decomposition(const ConicDecomposition& d) {
    ordered_json j;
    j["offset"] = rational(d.offset);
    auto terms = ordered_json::array();
    for (const auto& [w, part] : d.terms) {
        ordered_json t;
        t["weight"] = rational(w);
        t["blocks"] = block_partition(part)["blocks"];
        t["cdw"] = part.is_cdw();
        terms.push_back(t);
    }
    j["terms"] = terms;
    if (d.residual_gammas) j["residual_gammas"] = rationals(*d.residual_gammas);
    return j;
}

}  // namespace qap::reports
