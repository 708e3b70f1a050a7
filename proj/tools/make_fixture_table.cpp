// Generates the bundled fixture knot table. Every invariant column is
// computed from a diagram or braid representative at build time and checked
// against independently recorded determinant/signature/alexander data; any
// mismatch aborts the build. g4 values are only emitted when certified by a
// bundled chain: slice status, |sigma|/2 against a crossing-change or braid
// genus upper bound, or the reproduced concordance results.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cforge/corpus.hpp"
#include "cforge/dt.hpp"
#include "cforge/invariants.hpp"
#include "cforge/jones.hpp"
#include "cforge/moves.hpp"
#include "cforge/tables.hpp"

using namespace cforge;

namespace {

void check(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error("fixture validation: " + msg);
}

LaurentPoly poly(const std::vector<std::int64_t>& ascending) {
    LaurentPoly p;
    for (std::size_t e = 0; e < ascending.size(); ++e)
        p = p + LaurentPoly::monomial(ascending[e], static_cast<int>(e));
    return p;
}

Diagram normalized_closure(const BraidWord& b) {
    Diagram d = pd_to_diagram(braid_to_pd(b));
    if (gl_signature(d) > 0) d = mirror(d);
    return d;
}

int crossings_from_name(const std::string& name) {
    if (name == "unknot") return 0;
    std::size_t i = name[0] == 'K' ? 1 : 0;
    int n = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])))
        n = 10 * n + (name[i++] - '0');
    check(n > 0, "cannot read crossing number from '" + name + "'");
    return n;
}

const InvariantFingerprint kUnknotFp = [] {
    InvariantFingerprint fp;
    fp.alexander = LaurentPoly(1);
    return fp;
}();

// upper bound for g4 from short crossing-change paths to the unknot; sound
// here because no nontrivial knot of at most 10 crossings has trivial
// alexander polynomial, and every representative below stays in that range
std::optional<int> unknotting_upper(const Diagram& d) {
    if (d.crossings.size() > 10) return std::nullopt;
    const PDCode pd = diagram_to_pd(d);
    const int n = static_cast<int>(pd.crossings.size());
    std::vector<PDCode> once;
    for (int i = 0; i < n; ++i) {
        const PDCode flipped = pd_apply_move(pd, crossing_change(i));
        if (fingerprint(flipped).key() == kUnknotFp.key()) return 1;
        once.push_back(flipped);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (fingerprint(pd_apply_move(once[i], crossing_change(j))).key() == kUnknotFp.key())
                return 2;
    return std::nullopt;
}

struct Spec {
    std::string name;
    std::string rep_kind;  // "dt" | "braid"
    std::string rep_text;
    std::vector<std::int64_t> alex;  // expected coefficients from t^0
    std::int64_t det = 0;
    int abs_sig = 0;
    bool slice = false;
    std::optional<int> g4;      // explicit value; otherwise derived
    std::optional<int> g4_top;
    bool with_jones = false;
};

const std::vector<Spec> kSpecs = {
    {"unknot", "braid", "[]", {1}, 1, 0, true, 0, 0, false},
    {"3_1", "dt", "[4,6,2]", {1, -1, 1}, 3, 2, false, {}, {}, false},
    {"4_1", "braid", "[1,-2,1,-2]", {1, -3, 1}, 5, 0, false, {}, {}, false},
    {"5_1", "braid", "[1,1,1,1,1]", {1, -1, 1, -1, 1}, 5, 4, false, {}, {}, false},
    {"5_2", "dt", "[4,8,10,2,6]", {2, -3, 2}, 7, 2, false, {}, {}, false},
    {"6_1", "dt", "[4,8,12,10,2,6]", {2, -5, 2}, 9, 0, true, 0, 0, false},
    {"6_2", "dt", "[4,8,10,12,2,6]", {1, -3, 3, -3, 1}, 11, 2, false, {}, {}, false},
    {"6_3", "dt", "[4,8,10,2,12,6]", {1, -3, 5, -3, 1}, 13, 0, false, {}, {}, false},
    {"7_1", "braid", "[1,1,1,1,1,1,1]", {1, -1, 1, -1, 1, -1, 1}, 7, 6, false, {}, {}, false},
    {"7_2", "dt", "[4,10,14,12,2,8,6]", {3, -5, 3}, 11, 2, false, {}, {}, false},
    {"7_3", "dt", "[6,10,12,14,2,4,8]", {2, -3, 3, -3, 2}, 13, 4, false, {}, {}, false},
    {"7_4", "dt", "[6,10,12,14,4,2,8]", {4, -7, 4}, 15, 2, false, {}, {}, false},
    {"7_5", "dt", "[4,10,12,14,2,8,6]", {2, -4, 5, -4, 2}, 17, 4, false, {}, {}, false},
    {"7_6", "dt", "[4,8,12,2,14,6,10]", {1, -5, 7, -5, 1}, 19, 2, false, {}, {}, false},
    {"7_7", "dt", "[4,8,10,12,2,14,6]", {1, -5, 9, -5, 1}, 21, 0, false, {}, {}, false},
    {"8_1", "dt", "[4,10,16,14,12,2,8,6]", {3, -7, 3}, 13, 0, false, {}, {}, false},
    {"8_2", "dt", "[4,10,12,14,16,2,6,8]", {1, -3, 3, -3, 3, -3, 1}, 17, 4, false, {}, {}, false},
    {"8_3", "dt", "[6,12,10,16,14,4,2,8]", {4, -9, 4}, 17, 0, false, {}, {}, false},
    {"8_4", "dt", "[6,10,12,16,14,4,2,8]", {2, -5, 5, -5, 2}, 19, 2, false, {}, {}, false},
    {"8_5", "dt", "[6,8,12,2,14,16,4,10]", {1, -3, 4, -5, 4, -3, 1}, 21, 4, false, {}, {}, false},
    {"8_6", "dt", "[4,10,14,16,12,2,8,6]", {2, -6, 7, -6, 2}, 23, 2, false, {}, {}, false},
    {"8_7", "dt", "[4,10,12,14,2,16,6,8]", {1, -3, 5, -5, 5, -3, 1}, 23, 2, false, {}, {}, false},
    {"8_8", "dt", "[4,8,12,2,16,14,6,10]", {2, -6, 9, -6, 2}, 25, 0, true, 0, 0, true},
    {"8_9", "dt", "[6,10,12,14,16,4,2,8]", {1, -3, 5, -7, 5, -3, 1}, 25, 0, false, {}, {}, false},
    {"8_10", "dt", "[4,8,12,2,14,16,6,10]", {1, -3, 6, -7, 6, -3, 1}, 27, 2, false, {}, {}, false},
    {"8_11", "dt", "[4,10,12,14,16,2,8,6]", {2, -7, 9, -7, 2}, 27, 2, false, {}, {}, false},
    {"8_12", "dt", "[4,8,14,10,2,16,6,12]", {1, -7, 13, -7, 1}, 29, 0, false, {}, {}, false},
    {"8_13", "dt", "[4,10,12,14,2,16,8,6]", {2, -7, 11, -7, 2}, 29, 0, false, {}, {}, false},
    {"8_14", "dt", "[4,8,10,14,2,16,6,12]", {2, -8, 11, -8, 2}, 31, 2, false, {}, {}, false},
    {"8_15", "dt", "[4,8,12,2,14,6,16,10]", {3, -8, 11, -8, 3}, 33, 4, false, {}, {}, false},
    {"8_16", "dt", "[6,8,14,12,4,16,2,10]", {1, -4, 8, -9, 8, -4, 1}, 35, 2, false, {}, {}, false},
    {"8_17", "dt", "[6,8,12,14,4,16,2,10]", {1, -4, 8, -11, 8, -4, 1}, 37, 0, false, {}, {}, false},
    {"8_18", "dt", "[6,8,10,12,14,16,2,4]", {1, -5, 10, -13, 10, -5, 1}, 45, 0, false, {}, {}, false},
    {"8_19", "braid", "[1,2,1,2,1,2,1,2]", {1, -1, 0, 1, 0, -1, 1}, 3, 6, false, {}, {}, false},
    {"8_20", "braid", "[1,1,1,-2,-1,-1,-1,-2]", {1, -2, 3, -2, 1}, 9, 0, true, 0, 0, true},
    {"8_21", "braid", "[1,2,2,-1,-1,2,1,1]", {1, -4, 5, -4, 1}, 15, 2, false, {}, {}, false},
    // the three knots of the pull-up study: g4 = 2 with topological 4-genus 1
    {"K12a153", "dt", "[26,-30,-24,-18,-2,-28,-32,-34,-8,-6,-22,-20,-16,-10,-12,-4,-14]",
     {3, -11, 24, -31, 24, -11, 3}, 107, 2, false, 2, 1, false},
    {"K12n239", "dt", "[20,24,12,10,16,-18,30,8,6,34,2,32,14,28,26,4,22,36]",
     {2, -5, 9, -11, 9, -5, 2}, 43, 2, false, 2, 1, false},
    // certified-g4-at-least-3 endpoints; exact g4 is open, so the column is empty
    {"17ah_0168368", "dt", "[18,20,30,28,24,4,8,26,10,2,32,34,16,14,6,12,22]",
     {4, -23, 69, -146, 226, -261, 226, -146, 69, -23, 4}, 1197, 4, false, {}, {}, false},
    {"16a328556", "dt", "[6,14,26,16,20,22,4,24,32,30,28,12,2,10,8,18]",
     {10, -60, 173, -307, 369, -307, 173, -60, 10}, 1469, 4, false, {}, {}, false},
    {"18ah_2335674", "dt", "[32,14,30,28,24,22,36,4,6,26,12,10,34,18,16,2,20,8]",
     {16, -104, 322, -599, 731, -599, 322, -104, 16}, 2813, 4, false, {}, {}, false},
};

// slice endpoints reached by the reproduced resolutions/switches; their rows
// are generated from the concordance results themselves
struct DerivedSpec {
    std::string name;
    std::string via_source;  // pulldown source whose move produces the knot
    std::vector<std::int64_t> alex;
    std::int64_t det;
    bool with_jones;
};

const std::vector<DerivedSpec> kDerived = {
    {"10_75", "K12n52", {1, -7, 19, -27, 19, -7, 1}, 81, false},
    {"10_87", "K12a905", {2, -9, 18, -23, 18, -9, 2}, 81, false},
    {"10_137", "K12a1189", {1, -6, 11, -6, 1}, 25, false},
    {"K11n74", "K12n225", {1, -2, 3, -2, 1}, 9, true},
    {"K12n256", "K12n665", {2, -6, 9, -6, 2}, 25, true},
};

const std::int64_t kSourceDets[] = {15,  203, 235, 259, 207, 195, 179, 93,  189,
                                    267, 247, 123, 39,  39,  135, 35,  39,  159};

KnotRecord make_record(const std::string& name, int crossings, const Diagram& d, bool slice,
                       std::optional<int> g4, std::optional<int> g4_top, bool with_jones,
                       std::optional<int> braid_genus) {
    const InvariantFingerprint fp = fingerprint(d);
    check(fp.signature <= 0, name + ": representative not normalized to sigma <= 0");
    KnotRecord rec;
    rec.name = name;
    rec.crossing_number = crossings;
    // dt codes of bulky braid closures are omitted: realizing them back is
    // exponentially slow and the braid representative is the canonical one
    if (!d.crossings.empty() && d.crossings.size() <= 20) {
        rec.dt_code = format_dt(extract_dt(d));
        const Diagram redo = realize_dt_normalized(parse_dt(rec.dt_code));
        check(fingerprint(redo) == fp, name + ": dt code does not round-trip");
    }
    rec.alexander = fp.alexander;
    rec.signature = fp.signature;
    rec.determinant = fp.determinant;
    rec.is_slice = slice;
    if (with_jones) rec.jones = jones(diagram_to_pd(d));
    if (g4) {
        rec.g4 = g4;
    } else {
        int lower = -fp.signature / 2;
        if (lower == 0 && !detail::is_square(fp.determinant)) lower = 1;
        if (lower > 0) {
            std::optional<int> upper = unknotting_upper(d);
            if (braid_genus && (!upper || *braid_genus < *upper)) upper = braid_genus;
            if (upper && *upper == lower) rec.g4 = lower;
        }
    }
    rec.g4_top = g4_top;
    return rec;
}

int run(const std::string& out_path) {
    std::vector<KnotRecord> rows;

    for (const auto& s : kSpecs) {
        Diagram d;
        std::optional<int> braid_genus;
        if (s.rep_kind == "dt") {
            d = realize_dt_normalized(parse_dt(s.rep_text));
        } else {
            const BraidWord b = parse_braid(s.rep_text);
            if (!b.letters.empty()) {
                d = normalized_closure(b);
                braid_genus = (static_cast<int>(b.letters.size()) - b.strands + 1) / 2;
            }
        }
        KnotRecord rec = make_record(s.name, crossings_from_name(s.name), d, s.slice, s.g4,
                                     s.g4_top, s.with_jones, braid_genus);
        check(rec.alexander == poly(s.alex), s.name + ": alexander mismatch");
        check(rec.determinant == s.det, s.name + ": determinant mismatch");
        check(rec.signature == -s.abs_sig, s.name + ": signature mismatch");
        rows.push_back(std::move(rec));
    }

    // pull-down sources: braids from the published search results; the moves
    // below certify g4 = 1 for each (slice endpoint one genus away, and the
    // signature or the non-square determinant rules out sliceness)
    {
        std::size_t i = 0;
        for (const auto& row : corpus::pulldown_entries()) {
            const BraidWord b = make_braid(row.word);
            const Diagram d = normalized_closure(b);
            KnotRecord rec = make_record(row.source, crossings_from_name(row.source), d,
                                         /*slice=*/false, /*g4=*/1, {}, /*with_jones=*/false, {});
            check(rec.determinant == kSourceDets[i], rec.name + ": determinant mismatch");
            check(!detail::is_square(rec.determinant), rec.name + ": determinant is a square");
            check(std::abs(rec.signature) <= 2, rec.name + ": unexpected signature");
            rows.push_back(std::move(rec));
            ++i;
        }
        check(i == 18, "expected 18 pull-down sources");
    }

    // K12n512: the pull-up braid source
    {
        const Diagram d = normalized_closure(corpus::k12n512_braid());
        KnotRecord rec = make_record("K12n512", 12, d, false, 2, 1, false, {});
        check(rec.determinant == 67, "K12n512: determinant mismatch");
        check(rec.signature == -2, "K12n512: signature mismatch");
        rows.push_back(std::move(rec));
    }

    // slice endpoints reached by the reproduced moves
    std::map<std::string, const DerivedSpec*> derived_by_source;
    for (const auto& ds : kDerived) derived_by_source[ds.via_source] = &ds;
    std::set<std::string> emitted;
    for (const auto& row : corpus::pulldown_entries()) {
        const BraidWord after = apply_move(make_braid(row.word), row.move);
        const Diagram d = normalized_closure(after);
        const InvariantFingerprint fp = fingerprint(d);
        auto it = derived_by_source.find(row.source);
        if (it != derived_by_source.end() && it->second->name == row.target &&
            !emitted.count(row.target)) {
            const DerivedSpec& ds = *it->second;
            KnotRecord rec = make_record(ds.name, crossings_from_name(ds.name), d, /*slice=*/true,
                                         0, 0, ds.with_jones, {});
            check(rec.alexander == poly(ds.alex), ds.name + ": alexander mismatch");
            check(rec.determinant == ds.det, ds.name + ": determinant mismatch");
            check(rec.signature == 0, ds.name + ": slice endpoint with nonzero signature");
            rows.push_back(std::move(rec));
            emitted.insert(ds.name);
        } else {
            // endpoint already covered by a static row; the fingerprints must agree
            bool found = false;
            for (const auto& r : rows)
                if (r.name == row.target)
                    found = r.fingerprint().key() == fp.key();
            check(found, std::string(row.source) + ": move result does not match the " +
                             row.target + " row");
        }
    }
    check(emitted.size() == kDerived.size(), "missing derived slice endpoints");

    // collision audit: exactly two fingerprint classes are shared, both made
    // unambiguous by the stored jones polynomials (distinct even under mirror)
    {
        std::map<std::string, std::vector<const KnotRecord*>> classes;
        for (const auto& r : rows) classes[r.fingerprint().key()].push_back(&r);
        std::set<std::set<std::string>> shared;
        for (const auto& [key, members] : classes) {
            if (members.size() < 2) continue;
            std::set<std::string> names;
            for (const auto* r : members) names.insert(r->name);
            for (const auto* r : members) {
                check(r->jones.has_value(), r->name + ": collision row lacks jones");
                for (const auto* o : members) {
                    if (o == r) continue;
                    check(!(*r->jones == *o->jones), r->name + ": jones collision");
                    check(!(*r->jones == o->jones->mirrored().normalized()),
                          r->name + ": jones collision under mirror");
                }
            }
            shared.insert(names);
        }
        check(shared ==
                  std::set<std::set<std::string>>{{"8_8", "K12n256"}, {"8_20", "K11n74"}},
              "unexpected fingerprint collision classes");
    }

    check(rows.size() == 65, "expected 65 fixture rows, got " + std::to_string(rows.size()));

    // the table must ingest cleanly and answer a lookup for every record
    const std::string csv = format_table_csv(rows);
    {
        std::istringstream in(csv);
        const KnotTable table = ingest_table(in);
        check(table.row_errors().empty(), "fixture rows rejected on ingest");
        check(table.records().size() == rows.size(), "fixture rows lost on ingest");
        for (const auto& r : rows) {
            const LookupResult res = table.lookup(r.fingerprint());
            check(res.kind == LookupResult::Kind::Unique, r.name + ": self-lookup not unique");
            check(res.matches.front()->name == r.name, r.name + ": self-lookup wrong row");
        }
        check(table.collision_classes().size() == 2, "expected two collision classes");
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out.good()) throw std::runtime_error("cannot write " + out_path);
        out << csv;
    }
    int certified = 0;
    for (const auto& r : rows) certified += r.g4.has_value();
    std::cerr << "fixture table: " << rows.size() << " rows, " << certified
              << " with certified g4\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc > 1 ? argv[1] : "");
    } catch (const std::exception& e) {
        std::cerr << "make_fixture_table: " << e.what() << "\n";
        return 1;
    }
}
