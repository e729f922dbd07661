#pragma once

#include <optional>
#include <string>

#include "ramsey/exact.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/pathfind.hpp"

namespace ramsey {

// Serializable, independently re-verifiable claim. Avoidance certificates
// verify in polynomial time (replay the detector); arrowing and exact-value
// certificates re-run the search at the recorded budget.
struct Certificate {
    std::string claim;  // avoids | arrows | ramsey_exact | size_ramsey_exact
    Target target = PathSpec(2, 1, 4);
    int r = 2;
    Hypergraph host;
    std::optional<EdgeColoring> coloring;  // present for avoids
    std::optional<long long> value;        // present for exact claims
    std::string status = "unverified";
    std::string hash;
};

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Canonical serialization of the claim-relevant fields (everything except
/// status and hash); the content hash covers exactly this.
inline Json certificate_claim_json(const Certificate& cert) {
    Json j;
    j["format"] = 1;
    j["claim"] = cert.claim;
    j["target"] = to_json(cert.target);
    j["r"] = cert.r;
    j["host"] = to_json(cert.host);
    if (cert.coloring) j["coloring"] = cert.coloring->color_of;
    if (cert.value) j["value"] = *cert.value;
    return j;
}

inline std::string certificate_hash(const Certificate& cert) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(certificate_claim_json(cert).dump())));
    return std::string(buf);
}

inline Json to_json(const Certificate& cert) {
    Json j = certificate_claim_json(cert);
    j["status"] = cert.status;
    j["hash"] = cert.hash;
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    if (!j.contains("claim") || !j.contains("target") || !j.contains("r") || !j.contains("host"))
        throw std::invalid_argument("certificate JSON needs claim, target, r, host");
    cert.claim = j.at("claim").get<std::string>();
    cert.target = target_from_json(j.at("target"));
    cert.r = j.at("r").get<int>();
    cert.host = hypergraph_from_json(j.at("host"));
    if (j.contains("coloring")) {
        auto colors = j.at("coloring").get<std::vector<int>>();
        cert.coloring = EdgeColoring(colors, cert.r);
    }
    if (j.contains("value")) cert.value = j.at("value").get<long long>();
    if (j.contains("status")) cert.status = j.at("status").get<std::string>();
    if (j.contains("hash")) cert.hash = j.at("hash").get<std::string>();
    if (cert.claim != "avoids" && cert.claim != "arrows" && cert.claim != "ramsey_exact" &&
        cert.claim != "size_ramsey_exact")
        throw std::invalid_argument("unknown claim kind: " + cert.claim);
    if (cert.claim == "avoids" && !cert.coloring)
        throw std::invalid_argument("avoidance certificate needs a coloring");
    if ((cert.claim == "ramsey_exact" || cert.claim == "size_ramsey_exact") && !cert.value)
        throw std::invalid_argument("exact-value certificate needs a value");
    return cert;
}

struct VerifyResult {
    bool ok = false;
    std::string message;
    std::optional<PathWitness> violation;  // monochromatic witness on mismatch
};

inline VerifyResult verify_certificate(const Certificate& cert, const SearchOptions& opts = {}) {
    VerifyResult result;
    if (cert.claim == "avoids") {
        if (!cert.coloring) {
            result.message = "missing coloring";
            return result;
        }
        if (cert.coloring->size() != cert.host.edge_count()) {
            result.message = "coloring is not total on the host";
            return result;
        }
        if (cert.coloring->num_colors > cert.r) {
            result.message = "coloring uses more than r colors";
            return result;
        }
        if (std::holds_alternative<PathSpec>(cert.target)) {
            auto hit = contains_mono_path(cert.host, *cert.coloring, std::get<PathSpec>(cert.target));
            if (hit) {
                result.message = "claimed avoidance violated by a monochromatic path";
                result.violation = hit;
                return result;
            }
        } else {
            auto hit = contains_mono_tight_cycle_geq(cert.host, *cert.coloring,
                                                     std::get<CycleSpec>(cert.target));
            if (hit) {
                result.message = "claimed avoidance violated by a monochromatic tight cycle";
                result.violation = PathWitness{hit->cycle, hit->color};
                return result;
            }
        }
        result.ok = true;
        result.message = "avoidance verified";
        return result;
    }
    if (cert.claim == "arrows") {
        auto decision = arrows(cert.host, cert.r, cert.target, opts);
        if (decision.outcome == ArrowOutcome::arrows) {
            result.ok = true;
            result.message = "arrowing re-verified";
        } else if (decision.outcome == ArrowOutcome::avoided) {
            result.message = "host does not arrow the target (avoiding coloring exists)";
        } else {
            result.message = "re-search exhausted its budget";
        }
        return result;
    }
    if (cert.claim == "ramsey_exact") {
        auto res = ramsey_number_exact(cert.target, cert.r, static_cast<int>(*cert.value), opts);
        if (res.status == ExactStatus::found && res.value == *cert.value) {
            result.ok = true;
            result.message = "exact Ramsey value re-verified";
        } else if (res.status == ExactStatus::unknown) {
            result.message = "re-search exhausted its budget";
        } else {
            result.message = "re-search disagrees with the claimed value";
        }
        return result;
    }
    // size_ramsey_exact: the recorded host must arrow, and the re-search must
    // confirm minimality at the claimed edge count
    if (cert.host.edge_count() != static_cast<int>(*cert.value)) {
        result.message = "witness host edge count differs from the claimed value";
        return result;
    }
    auto host_decision = arrows(cert.host, cert.r, cert.target, opts);
    if (host_decision.outcome != ArrowOutcome::arrows) {
        result.message = host_decision.outcome == ArrowOutcome::unknown
                             ? "re-search exhausted its budget"
                             : "recorded witness host does not arrow the target";
        return result;
    }
    auto res = size_ramsey_exact(cert.target, cert.r, static_cast<int>(*cert.value), opts);
    if (res.status == ExactStatus::found && res.value == *cert.value) {
        result.ok = true;
        result.message = "exact size-Ramsey value re-verified";
    } else if (res.status == ExactStatus::unknown) {
        result.message = "re-search exhausted its budget";
    } else {
        result.message = "re-search disagrees with the claimed value";
    }
    return result;
}

inline Certificate make_avoidance_certificate(const Hypergraph& host, const EdgeColoring& coloring,
                                              const Target& target, int r) {
    Certificate cert;
    cert.claim = "avoids";
    cert.target = target;
    cert.r = r;
    cert.host = host;
    cert.coloring = coloring;
    cert.hash = certificate_hash(cert);
    return cert;
}

inline Certificate make_arrows_certificate(const Hypergraph& host, const Target& target, int r) {
    Certificate cert;
    cert.claim = "arrows";
    cert.target = target;
    cert.r = r;
    cert.host = host;
    cert.hash = certificate_hash(cert);
    return cert;
}

inline Certificate make_exact_certificate(const std::string& kind, const Hypergraph& host,
                                          const Target& target, int r, long long value) {
    Certificate cert;
    cert.claim = kind;
    cert.target = target;
    cert.r = r;
    cert.host = host;
    cert.value = value;
    cert.hash = certificate_hash(cert);
    return cert;
}

}  // namespace ramsey
