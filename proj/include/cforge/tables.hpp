#pragma once

// Reference-table ingestion, the fingerprint index, target-list construction
// for pull-up searches, and the append-only findings store.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cforge/dt.hpp"
#include "cforge/invariants.hpp"
#include "cforge/lattice.hpp"
#include "cforge/serial.hpp"

namespace cforge {

struct KnotRecord {
    std::string name;
    int crossing_number = 0;
    std::string dt_code;  // empty when the table has no diagram for the knot
    LaurentPoly alexander;
    int signature = 0;
    std::int64_t determinant = 1;
    std::optional<LaurentPoly> jones;
    bool is_slice = false;
    std::optional<int> g4;
    std::optional<int> g4_top;

    InvariantFingerprint fingerprint() const {
        InvariantFingerprint fp;
        fp.alexander = alexander;
        fp.signature = signature;
        fp.determinant = determinant;
        fp.jones = jones;
        return fp;
    }
};

struct LookupResult {
    enum class Kind { None, Unique, Collision };
    Kind kind = Kind::None;
    std::vector<const KnotRecord*> matches;
    bool via_mirror = false;  // the unique match sits on the opposite chirality
};

namespace detail {

// minimal RFC-4180 row splitter; quoted fields may hold commas and "" quotes
inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else if (ch != '\r') {
            field.push_back(ch);
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote");
    out.push_back(std::move(field));
    return out;
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

inline std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline bool is_square(std::int64_t x) {
    if (x < 0) return false;
    const std::int64_t r = isqrt64(x);
    return r * r == x;
}

}  // namespace detail

class KnotTable {
public:
    // Validates the record against the data gates and indexes it.
    void add(KnotRecord rec) {
        if (rec.name.empty()) throw std::invalid_argument("record without a name");
        if (by_name_.count(rec.name))
            throw std::invalid_argument("duplicate record name '" + rec.name + "'");
        if (rec.crossing_number < 0) throw std::invalid_argument("negative crossing number");
        if (!(normalize_alexander(rec.alexander) == rec.alexander))
            throw std::invalid_argument("alexander polynomial is not in normalized form");
        if (determinant(rec.alexander) != rec.determinant)
            throw std::invalid_argument("determinant does not equal |alexander(-1)|");
        if (rec.signature % 2 != 0) throw std::invalid_argument("knot signature must be even");
        const int half_sig = std::abs(rec.signature) / 2;
        if (rec.g4 && *rec.g4 < half_sig)
            throw std::invalid_argument("g4 violates the signature bound");
        if (rec.g4 && rec.g4_top && *rec.g4_top > *rec.g4)
            throw std::invalid_argument("topological 4-genus exceeds the smooth 4-genus");
        if (rec.is_slice) {
            if (rec.signature != 0) throw std::invalid_argument("slice knot with nonzero signature");
            if (rec.g4 && *rec.g4 != 0) throw std::invalid_argument("slice knot with positive g4");
            if (!detail::is_square(rec.determinant))
                throw std::invalid_argument("slice knot determinant is not a perfect square");
        }
        if (!rec.dt_code.empty()) parse_dt(rec.dt_code);  // throws when malformed
        if (rec.jones && !(*rec.jones == rec.jones->normalized()))
            throw std::invalid_argument("jones polynomial is not in normalized form");
        const std::size_t idx = rows_.size();
        by_key_[rec.fingerprint().key()].push_back(idx);
        by_name_[rec.name] = idx;
        rows_.push_back(std::move(rec));
    }

    const std::vector<KnotRecord>& records() const { return rows_; }

    const KnotRecord* by_name(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? nullptr : &rows_[it->second];
    }

    // Names identify knots only up to mirror image, so both chiralities of
    // the query are consulted; amphichiral double hits are deduplicated.
    LookupResult lookup(const InvariantFingerprint& fp) const {
        LookupResult res;
        std::vector<std::pair<std::size_t, bool>> hits;
        auto scan = [&](const InvariantFingerprint& probe, bool via_mirror) {
            auto it = by_key_.find(probe.key());
            if (it == by_key_.end()) return;
            for (std::size_t idx : it->second) {
                if (!rows_[idx].fingerprint().compatible(probe)) continue;
                bool seen = false;
                for (const auto& h : hits) seen = seen || h.first == idx;
                if (!seen) hits.emplace_back(idx, via_mirror);
            }
        };
        scan(fp, false);
        scan(mirrored(fp), true);
        for (const auto& h : hits) res.matches.push_back(&rows_[h.first]);
        if (hits.size() == 1) {
            res.kind = LookupResult::Kind::Unique;
            res.via_mirror = hits.front().second;
        } else if (hits.size() > 1) {
            res.kind = LookupResult::Kind::Collision;
        }
        return res;
    }

    // groups of names sharing an (alexander, signature, determinant) key
    std::vector<std::vector<std::string>> collision_classes() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& [key, idxs] : by_key_) {
            if (idxs.size() < 2) continue;
            std::vector<std::string> names;
            for (std::size_t i : idxs) names.push_back(rows_[i].name);
            out.push_back(std::move(names));
        }
        return out;
    }

    const std::vector<std::string>& row_errors() const { return row_errors_; }
    void note_row_error(std::string msg) { row_errors_.push_back(std::move(msg)); }

private:
    std::vector<KnotRecord> rows_;
    std::map<std::string, std::size_t> by_name_;
    std::map<std::string, std::vector<std::size_t>> by_key_;
    std::vector<std::string> row_errors_;
};

inline const char* kTableHeader = "name,crossings,dt,alexander,signature,determinant,slice,g4,g4_top,jones";

// CSV ingestion: header-driven, unknown columns tolerated, malformed rows
// skipped with a line-numbered report; duplicate names abort the ingest.
inline KnotTable ingest_table(std::istream& in) {
    KnotTable table;
    std::string line;
    if (!std::getline(in, line)) return table;  // empty file -> empty index
    const auto header = detail::split_csv_row(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[detail::trimmed(header[i])] = i;
    for (const char* need : {"name", "crossings", "dt", "alexander", "signature", "determinant",
                             "slice", "g4", "g4_top"})
        if (!col.count(need))
            throw std::invalid_argument(std::string("table header missing column '") + need + "'");

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trimmed(line).empty()) continue;
        try {
            const auto fields = detail::split_csv_row(line);
            auto get = [&](const char* name) -> std::string {
                const std::size_t i = col.at(name);
                if (i >= fields.size()) throw std::invalid_argument(std::string("missing field '") + name + "'");
                return detail::trimmed(fields[i]);
            };
            KnotRecord rec;
            rec.name = get("name");
            rec.crossing_number = std::stoi(get("crossings"));
            rec.dt_code = get("dt");
            rec.alexander = LaurentPoly::parse(get("alexander"));
            rec.signature = std::stoi(get("signature"));
            rec.determinant = std::stoll(get("determinant"));
            const std::string slice = get("slice");
            if (slice == "true" || slice == "1") rec.is_slice = true;
            else if (slice == "false" || slice == "0") rec.is_slice = false;
            else throw std::invalid_argument("bad slice flag '" + slice + "'");
            if (const std::string g4 = get("g4"); !g4.empty()) rec.g4 = std::stoi(g4);
            if (const std::string g4t = get("g4_top"); !g4t.empty()) rec.g4_top = std::stoi(g4t);
            if (col.count("jones")) {
                const std::size_t i = col.at("jones");
                if (i < fields.size() && !detail::trimmed(fields[i]).empty())
                    rec.jones = LaurentPoly::parse(detail::trimmed(fields[i]));
            }
            table.add(std::move(rec));
        } catch (const std::invalid_argument& e) {
            if (std::string(e.what()).rfind("duplicate record name", 0) == 0) throw;
            table.note_row_error("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::out_of_range& e) {
            table.note_row_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return table;
}

inline KnotTable ingest_table(const std::string& path, const std::string& format = "csv") {
    if (format != "csv") throw std::invalid_argument("unsupported table format '" + format + "'");
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open table '" + path + "'");
    return ingest_table(in);
}

inline std::string format_table_csv(const std::vector<KnotRecord>& records) {
    std::ostringstream out;
    out << kTableHeader << "\n";
    for (const auto& r : records) {
        out << detail::csv_escape(r.name) << ',' << r.crossing_number << ','
            << detail::csv_escape(r.dt_code) << ',' << detail::csv_escape(r.alexander.str()) << ','
            << r.signature << ',' << r.determinant << ',' << (r.is_slice ? "true" : "false") << ',';
        if (r.g4) out << *r.g4;
        out << ',';
        if (r.g4_top) out << *r.g4_top;
        out << ',';
        if (r.jones) out << detail::csv_escape(r.jones->str());
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// target list: knots certified g4 >= 3 via signature -4 plus embedding failure

struct TargetCandidate {
    std::string name;
    std::string dt;
    std::optional<int> g4_top;  // recorded topological bound, for query pruning
};

struct TargetEntry {
    std::string name;
    std::string dt;
    InvariantFingerprint fp;  // of the sigma <= 0 realization
    int signature = -4;
    std::optional<int> g4_top;
    IMatrix gram;
    EmbeddingCertificate certificate;
};

struct TargetList {
    std::vector<TargetEntry> entries;
    std::vector<std::string> log;  // per-candidate dispositions

    // fingerprint match up to mirror; g4_top pruning happens at query time
    const TargetEntry* find(const InvariantFingerprint& fp,
                            std::optional<int> source_g4_top = std::nullopt) const {
        const InvariantFingerprint fpm = mirrored(fp);
        for (const auto& e : entries) {
            if (!(e.fp.compatible(fp) || e.fp.compatible(fpm))) continue;
            if (source_g4_top && e.g4_top && *e.g4_top > *source_g4_top + 1) continue;
            return &e;
        }
        return nullptr;
    }
};

inline TargetList build_target_list(const std::vector<TargetCandidate>& candidates,
                                    std::uint64_t budget_nodes = 0) {
    TargetList list;
    for (const auto& cand : candidates) {
        try {
            const Diagram d = realize_dt_normalized(parse_dt(cand.dt));
            const int sigma = gl_signature(d);
            if (sigma != -4) {
                list.log.push_back(cand.name + ": filtered (signature " + std::to_string(sigma) + ")");
                continue;
            }
            const GoeritzForm form = positive_goeritz(d);
            const int n = static_cast<int>(form.matrix.size()) + 4;
            const EmbeddingCertificate cert = embeds(form.matrix, n, budget_nodes);
            if (cert.outcome == EmbeddingCertificate::Outcome::Witness) {
                list.log.push_back(cand.name + ": excluded (gram embeds in Z^" + std::to_string(n) + ")");
                continue;
            }
            if (cert.outcome == EmbeddingCertificate::Outcome::Inconclusive) {
                list.log.push_back(cand.name + ": excluded (budget exhausted, inconclusive)");
                continue;
            }
            TargetEntry entry;
            entry.name = cand.name;
            entry.dt = cand.dt;
            entry.fp = fingerprint(d);
            entry.signature = sigma;
            entry.g4_top = cand.g4_top;
            entry.gram = form.matrix;
            entry.certificate = cert;
            list.entries.push_back(std::move(entry));
            list.log.push_back(cand.name + ": retained (exhausted, g4 >= 3)");
        } catch (const std::exception& e) {
            list.log.push_back(cand.name + ": failed (" + e.what() + ")");
        }
    }
    return list;
}

// candidate files: one knot per line, "name dt-code [g4_top]"
inline std::vector<TargetCandidate> parse_candidates(std::istream& in) {
    std::vector<TargetCandidate> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        TargetCandidate c;
        if (!(fields >> c.name)) continue;  // blank line
        if (c.name[0] == '#') continue;
        if (!(fields >> c.dt))
            throw std::invalid_argument("candidates: line " + std::to_string(lineno) +
                                        ": expected 'name dt-code'");
        if (int g4t = 0; fields >> g4t) c.g4_top = g4t;
        out.push_back(std::move(c));
    }
    return out;
}

inline void to_json(nlohmann::json& j, const TargetEntry& e) {
    j = nlohmann::json{{"name", e.name},          {"dt", e.dt},
                       {"fingerprint", e.fp},     {"signature", e.signature},
                       {"gram", e.gram},          {"certificate", e.certificate}};
    if (e.g4_top) j["g4_top"] = *e.g4_top;
}

inline void from_json(const nlohmann::json& j, TargetEntry& e) {
    e = TargetEntry{};
    e.name = j.at("name").get<std::string>();
    e.dt = j.at("dt").get<std::string>();
    e.fp = j.at("fingerprint").get<InvariantFingerprint>();
    e.signature = j.at("signature").get<int>();
    if (j.contains("g4_top")) e.g4_top = j.at("g4_top").get<int>();
    e.gram = j.at("gram").get<IMatrix>();
    e.certificate = j.at("certificate").get<EmbeddingCertificate>();
}

inline void save_targets(const std::string& path, const TargetList& list) {
    std::ofstream out(path, std::ios::trunc);
    if (!out.good()) throw std::runtime_error("cannot write targets '" + path + "'");
    for (const auto& e : list.entries) out << nlohmann::json(e).dump() << "\n";
}

inline TargetList load_targets(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open targets '" + path + "'");
    TargetList list;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trimmed(line).empty()) continue;
        try {
            TargetEntry e = nlohmann::json::parse(line).get<TargetEntry>();
            if (e.signature != -4)
                throw std::invalid_argument("target entry without signature -4");
            if (e.certificate.outcome != EmbeddingCertificate::Outcome::Exhausted)
                throw std::invalid_argument("target entry without an exhausted certificate");
            list.entries.push_back(std::move(e));
        } catch (const std::exception& e) {
            throw std::runtime_error("targets '" + path + "': line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return list;
}

// ---------------------------------------------------------------------------
// findings store

struct ConcordanceFinding {
    std::string source;
    std::string rep_kind;  // "braid" | "dt" | "pd"
    std::string rep_text;
    ConcordanceMove move;
    InvariantFingerprint result;
    std::string match = "unidentified";
    std::string inference = "none";  // "pulled-down" | "pulled-up" | "none"
    std::optional<int> g4;
    std::string lower_evidence;  // source lower-bound chain (Eq. (1) or Fox-Milnor)
    std::string upper_evidence;  // genus-one move chain (Eq. (2) direction)
    std::uint64_t seed = 0;
    std::string timestamp;  // the only nondeterministic field

    friend bool operator==(const ConcordanceFinding&, const ConcordanceFinding&) = default;
};

inline void to_json(nlohmann::json& j, const ConcordanceFinding& f) {
    j = nlohmann::json{{"source", f.source},
                       {"representation", {{"kind", f.rep_kind}, {"text", f.rep_text}}},
                       {"move", f.move},
                       {"fingerprint", f.result},
                       {"match", f.match},
                       {"inference", f.inference},
                       {"seed", f.seed},
                       {"timestamp", f.timestamp}};
    if (f.g4) j["g4"] = *f.g4;
    if (!f.lower_evidence.empty() || !f.upper_evidence.empty())
        j["evidence"] = {{"lower", f.lower_evidence}, {"upper", f.upper_evidence}};
}

inline void from_json(const nlohmann::json& j, ConcordanceFinding& f) {
    f = ConcordanceFinding{};
    f.source = j.at("source").get<std::string>();
    f.rep_kind = j.at("representation").at("kind").get<std::string>();
    f.rep_text = j.at("representation").at("text").get<std::string>();
    f.move = j.at("move").get<ConcordanceMove>();
    f.result = j.at("fingerprint").get<InvariantFingerprint>();
    f.match = j.at("match").get<std::string>();
    f.inference = j.at("inference").get<std::string>();
    f.seed = j.at("seed").get<std::uint64_t>();
    f.timestamp = j.at("timestamp").get<std::string>();
    if (j.contains("g4")) f.g4 = j.at("g4").get<int>();
    if (j.contains("evidence")) {
        f.lower_evidence = j.at("evidence").at("lower").get<std::string>();
        f.upper_evidence = j.at("evidence").at("upper").get<std::string>();
    }
}

// stable order with timestamps cleared, for determinism comparisons
inline void canonicalize_findings(std::vector<ConcordanceFinding>& findings) {
    for (auto& f : findings) f.timestamp.clear();
    std::sort(findings.begin(), findings.end(),
              [](const ConcordanceFinding& a, const ConcordanceFinding& b) {
                  return nlohmann::json(a).dump() < nlohmann::json(b).dump();
              });
}

inline void persist_findings(const std::string& path,
                             const std::vector<ConcordanceFinding>& findings) {
    std::ofstream out(path, std::ios::app);
    if (!out.good()) throw std::runtime_error("cannot append findings '" + path + "'");
    for (const auto& f : findings) out << nlohmann::json(f).dump() << "\n";
}

inline std::vector<ConcordanceFinding> load_findings(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open findings '" + path + "'");
    std::vector<ConcordanceFinding> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trimmed(line).empty()) continue;
        try {
            out.push_back(nlohmann::json::parse(line).get<ConcordanceFinding>());
        } catch (const std::exception& e) {
            throw std::runtime_error("findings '" + path + "': line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return out;
}

}  // namespace cforge
