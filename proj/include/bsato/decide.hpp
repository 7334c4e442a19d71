#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsato/bernstein.hpp"

namespace bsato {

enum class Conclusion { LEqualsR, LNotEqualsR, Inconclusive };
enum class HypothesisStatus { Established, AssumedByUser, Failed };

inline std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::LEqualsR: return "L_equals_R";
        case Conclusion::LNotEqualsR: return "L_not_equals_R";
        case Conclusion::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

inline std::string to_string(HypothesisStatus h) {
    switch (h) {
        case HypothesisStatus::Established: return "Established";
        case HypothesisStatus::AssumedByUser: return "AssumedByUser";
        case HypothesisStatus::Failed: return "Failed";
    }
    return "Failed";
}

struct EvidenceItem {
    std::string name;
    FactoredBPoly poly;
    std::vector<long long> integral_roots_all;
};

struct Verdict {
    Conclusion conclusion = Conclusion::Inconclusive;
    HypothesisStatus hypothesis = HypothesisStatus::Failed;
    std::vector<EvidenceItem> evidence;
    // set when a pipeline precondition failed (NotIsolated, NotHomogeneous, ...)
    std::optional<std::string> error_code;
    std::optional<std::string> error_detail;
};

namespace decide_detail {

inline EvidenceItem evidence_for(std::string name, const FactoredBPoly& b) {
    return {std::move(name), b, integral_roots(b, RootMode::All)};
}

} // namespace decide_detail

// Hypersurface criterion: L = R exactly when the reduced Bernstein
// polynomial has no integral root.
inline Verdict decide_hypersurface(const Poly& f, const WeightSystem& w) {
    Verdict v;
    try {
        Morphism m({}, f);
        FactoredBPoly btilde = bprime_wh(m, normalize_weights(m, w));
        FactoredBPoly b = full_from_reduced(btilde);
        v.evidence.push_back(decide_detail::evidence_for("btilde(f)", btilde));
        v.evidence.push_back(decide_detail::evidence_for("b(f)", b));
        v.hypothesis = HypothesisStatus::Established;
        v.conclusion = integral_roots(btilde, RootMode::All).empty()
                           ? Conclusion::LEqualsR
                           : Conclusion::LNotEqualsR;
    } catch (const Error& e) {
        v.conclusion = Conclusion::Inconclusive;
        v.hypothesis = HypothesisStatus::Failed;
        v.error_code = e.code();
        v.error_detail = e.what();
    }
    return v;
}

struct ChainResult {
    bool established = false;
    std::vector<EvidenceItem> evidence;
    std::optional<std::string> error_code;
    std::optional<std::string> error_detail;
};

// Sufficient condition for D.delta_h = R_h, checked stage by stage:
//   stage 1:  -1 is the only integral root of b_{h_1}(s);
//   stage i+1: b'_{h_(i+1)}(h_1..h_i, s) has no integral root < -1.
// A failed stage yields Inconclusive (the criterion is one-sided: it never
// certifies that delta_h fails to generate).
inline ChainResult check_generation_chain(const std::vector<Poly>& h, const WeightSystem& w) {
    ChainResult out;
    if (h.empty()) { // empty tuple: R_h = O, generated by delta_h = 1
        out.established = true;
        return out;
    }
    try {
        {
            Morphism m1({}, h[0]);
            FactoredBPoly b1 = full_from_reduced(bprime_wh(m1, normalize_weights(m1, w)));
            out.evidence.push_back(decide_detail::evidence_for("b(h1)", b1));
            auto roots = integral_roots(b1, RootMode::All);
            if (roots.size() != 1 || roots[0] != -1) return out;
        }
        for (std::size_t i = 1; i < h.size(); ++i) {
            std::vector<Poly> head(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(i));
            Morphism mi(std::move(head), h[i]);
            FactoredBPoly bp = bprime_wh(mi, normalize_weights(mi, w));
            std::string name = "bprime(h" + std::to_string(i + 1) + "|h1..h" + std::to_string(i) + ")";
            out.evidence.push_back(decide_detail::evidence_for(std::move(name), bp));
            for (long long r : integral_roots(bp, RootMode::StrictlyNegative))
                if (r < -1) return out;
        }
        out.established = true;
    } catch (const Error& e) {
        out.error_code = e.code();
        out.error_detail = e.what();
    }
    return out;
}

// Complete-intersection criterion: under D.delta_h = R_h, L = R exactly when
// b'_f(h,s) has no strictly negative integral root. The hypothesis is only
// ever Established through the chain above, or AssumedByUser.
inline Verdict decide_ci(const Morphism& m, const WeightSystem& w, bool assume_generation) {
    Verdict v;
    ChainResult chain = check_generation_chain(m.h, w);
    v.evidence = chain.evidence;
    if (chain.established)
        v.hypothesis = HypothesisStatus::Established;
    else if (assume_generation)
        v.hypothesis = HypothesisStatus::AssumedByUser;
    else
        v.hypothesis = HypothesisStatus::Failed;
    if (chain.error_code && !assume_generation) {
        v.error_code = chain.error_code;
        v.error_detail = chain.error_detail;
    }

    std::optional<FactoredBPoly> bp;
    try {
        bp = bprime_wh(m, normalize_weights(m, w));
        v.evidence.push_back(decide_detail::evidence_for("bprime(f|h)", *bp));
    } catch (const Error& e) {
        v.conclusion = Conclusion::Inconclusive;
        if (!v.error_code) {
            v.error_code = e.code();
            v.error_detail = e.what();
        }
        return v;
    }

    if (v.hypothesis == HypothesisStatus::Failed) {
        v.conclusion = Conclusion::Inconclusive;
        return v;
    }
    v.conclusion = integral_roots(*bp, RootMode::StrictlyNegative).empty()
                       ? Conclusion::LEqualsR
                       : Conclusion::LNotEqualsR;
    return v;
}

} // namespace bsato
