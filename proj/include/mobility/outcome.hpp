#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mobility {

/// Shared accept/reject result for the recognizers. Accept carries a witness
/// ordering (and the final ordering where the model has one); Reject carries
/// the first failing event index, a matched pattern instance, or a
/// contradiction found while sorting vertices.
struct RecognitionOutcome {
    enum class Verdict { Accept, Reject };
    enum class Reason { None, BadEvent, PatternInstance, Contradiction };

    Verdict verdict = Verdict::Reject;
    Reason reason = Reason::None;

    // Accept payload.
    std::vector<int> ordering;        // witness initial ordering (vertex indices)
    std::vector<int> final_ordering;  // ordering after replaying all events

    // Reject payload.
    std::size_t event_index = 0;  // 1-based, for Reason::BadEvent
    std::string pattern_id;       // for Reason::PatternInstance
    std::vector<int> witness_nodes;
    std::string message;

    bool accepted() const { return verdict == Verdict::Accept; }

    static RecognitionOutcome accept(std::vector<int> ordering, std::vector<int> final_ordering = {}) {
        RecognitionOutcome out;
        out.verdict = Verdict::Accept;
        out.ordering = std::move(ordering);
        out.final_ordering = std::move(final_ordering);
        return out;
    }

    static RecognitionOutcome reject_event(std::size_t index, std::string message = {}) {
        RecognitionOutcome out;
        out.reason = Reason::BadEvent;
        out.event_index = index;
        out.message = std::move(message);
        return out;
    }

    static RecognitionOutcome reject_pattern(std::string id, std::vector<int> nodes,
                                             std::string message = {}) {
        RecognitionOutcome out;
        out.reason = Reason::PatternInstance;
        out.pattern_id = std::move(id);
        out.witness_nodes = std::move(nodes);
        out.message = std::move(message);
        return out;
    }

    static RecognitionOutcome reject_contradiction(std::vector<int> nodes, std::string message = {}) {
        RecognitionOutcome out;
        out.reason = Reason::Contradiction;
        out.witness_nodes = std::move(nodes);
        out.message = std::move(message);
        return out;
    }
};

}  // namespace mobility
