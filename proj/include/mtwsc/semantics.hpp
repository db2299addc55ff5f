#pragma once

#include <optional>
#include <span>
#include <string>

#include "mtwsc/model.hpp"

namespace mtwsc {

/// Link match type between a provided and a required concept. Only Exact
/// and Plugin links may appear in a decoded workflow.
enum class MatchDegree { Exact, Plugin, Fail };

constexpr double match_score(MatchDegree d) {
    switch (d) {
        case MatchDegree::Exact: return 1.0;
        case MatchDegree::Plugin: return 0.75;
        case MatchDegree::Fail: return 0.0;
    }
    return 0.0;
}

const char* to_string(MatchDegree d);

/// True iff `ancestor` lies on the parent chain of `descendant`, or equals it.
bool subsumes(const Ontology& ontology, int ancestor, int descendant);
bool subsumes(const Ontology& ontology, const std::string& ancestor, const std::string& descendant);

/// Exact if the concepts are equal, Plugin if `provided` is a strict
/// descendant of `required` (a more specific value satisfies the
/// requirement), Fail otherwise.
MatchDegree match(const Ontology& ontology, int provided, int required);
MatchDegree match(const Ontology& ontology, const std::string& provided, const std::string& required);

/// Taxonomy similarity 2*depth(lca) / (depth(a) + depth(b)), root depth 1.
/// Symmetric, in (0,1], and 1 exactly when a == b.
double similarity(const Ontology& ontology, int a, int b);
double similarity(const Ontology& ontology, const std::string& a, const std::string& b);

/// Source id used for the workflow Start node in provider sets and DAG
/// edges; service sources use their repository index. Start sorts before
/// every service on ties.
constexpr int kStartSource = -1;

struct AvailableConcept {
    int source;      // kStartSource or service index
    int concept_id;
};

struct SourceMatch {
    int source;
    MatchDegree degree;
    double similarity;
};

/// Among all available pairs whose concept matches `required` with a
/// non-Fail degree, picks the one maximizing (degree score, similarity),
/// breaking ties by lowest source. Empty when nothing matches.
std::optional<SourceMatch> best_source(const Ontology& ontology,
                                       std::span<const AvailableConcept> available,
                                       int required);

}  // namespace mtwsc
