#pragma once

// JSON bindings for the core value types, kept separate so the math headers
// stay dependency-free.

#include <string>

#include "json.hpp"

#include "cforge/invariants.hpp"
#include "cforge/lattice.hpp"
#include "cforge/moves.hpp"

namespace cforge {

inline std::string move_kind_name(ConcordanceMove::Kind k) {
    switch (k) {
        case ConcordanceMove::Kind::CrossingChange: return "crossing_change";
        case ConcordanceMove::Kind::SwitchPair: return "switch";
        case ConcordanceMove::Kind::Resolve: return "resolve";
        case ConcordanceMove::Kind::DeResolve: return "deresolve";
    }
    throw std::logic_error("unreachable move kind");
}

inline ConcordanceMove::Kind move_kind_from_name(const std::string& s) {
    if (s == "crossing_change") return ConcordanceMove::Kind::CrossingChange;
    if (s == "switch") return ConcordanceMove::Kind::SwitchPair;
    if (s == "resolve") return ConcordanceMove::Kind::Resolve;
    if (s == "deresolve") return ConcordanceMove::Kind::DeResolve;
    throw std::invalid_argument("unknown move kind '" + s + "'");
}

inline void to_json(nlohmann::json& j, const ConcordanceMove& m) {
    j = nlohmann::json{{"kind", move_kind_name(m.kind)}, {"i", m.i}};
    if (m.kind != ConcordanceMove::Kind::CrossingChange) j["j"] = m.j;
    if (m.kind == ConcordanceMove::Kind::DeResolve) {
        j["letter_i"] = m.letter_i;
        j["letter_j"] = m.letter_j;
    }
}

inline void from_json(const nlohmann::json& j, ConcordanceMove& m) {
    m = ConcordanceMove{};
    m.kind = move_kind_from_name(j.at("kind").get<std::string>());
    m.i = j.at("i").get<int>();
    if (m.kind != ConcordanceMove::Kind::CrossingChange) m.j = j.at("j").get<int>();
    if (m.kind == ConcordanceMove::Kind::DeResolve) {
        m.letter_i = j.at("letter_i").get<int>();
        m.letter_j = j.at("letter_j").get<int>();
    }
}

inline void to_json(nlohmann::json& j, const InvariantFingerprint& fp) {
    j = nlohmann::json{{"alexander", fp.alexander.str()},
                       {"signature", fp.signature},
                       {"determinant", fp.determinant}};
    if (fp.jones) j["jones"] = fp.jones->str();
}

inline void from_json(const nlohmann::json& j, InvariantFingerprint& fp) {
    fp = InvariantFingerprint{};
    fp.alexander = LaurentPoly::parse(j.at("alexander").get<std::string>());
    fp.signature = j.at("signature").get<int>();
    fp.determinant = j.at("determinant").get<std::int64_t>();
    if (j.contains("jones")) fp.jones = LaurentPoly::parse(j.at("jones").get<std::string>());
}

inline const char* outcome_name(EmbeddingCertificate::Outcome o) {
    switch (o) {
        case EmbeddingCertificate::Outcome::Witness: return "witness";
        case EmbeddingCertificate::Outcome::Exhausted: return "exhausted";
        case EmbeddingCertificate::Outcome::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("unreachable embedding outcome");
}

inline EmbeddingCertificate::Outcome outcome_from_name(const std::string& s) {
    if (s == "witness") return EmbeddingCertificate::Outcome::Witness;
    if (s == "exhausted") return EmbeddingCertificate::Outcome::Exhausted;
    if (s == "inconclusive") return EmbeddingCertificate::Outcome::Inconclusive;
    throw std::invalid_argument("unknown embedding outcome '" + s + "'");
}

inline void to_json(nlohmann::json& j, const EmbeddingCertificate& c) {
    j = nlohmann::json{{"outcome", outcome_name(c.outcome)},
                       {"nodes", c.nodes_searched},
                       {"symmetry_classes", c.symmetry_classes}};
    if (c.outcome == EmbeddingCertificate::Outcome::Witness) j["witness"] = c.witness;
}

inline void from_json(const nlohmann::json& j, EmbeddingCertificate& c) {
    c = EmbeddingCertificate{};
    c.outcome = outcome_from_name(j.at("outcome").get<std::string>());
    c.nodes_searched = j.at("nodes").get<std::uint64_t>();
    c.symmetry_classes = j.at("symmetry_classes").get<std::uint64_t>();
    if (j.contains("witness")) c.witness = j.at("witness").get<IMatrix>();
}

}  // namespace cforge
