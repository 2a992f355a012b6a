// Command-line harness: structure and poset analysis, corpus generation with
// a content-hashed cache, verification reports, DOT diagrams, and the full
// acceptance suite.  Reports are JSON with a stable schema; everything that
// can differ between identical runs lives in the `timings` section.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage or input
// errors (bad flags, malformed files, size caps).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "copieslab/acceptance.hpp"
#include "copieslab/embeddings.hpp"
#include "copieslab/io.hpp"
#include "copieslab/orders.hpp"
#include "copieslab/regular_open.hpp"
#include "copieslab/report.hpp"
#include "copieslab/rng.hpp"
#include "copieslab/similarity.hpp"
#include "copieslab/structure.hpp"
#include "copieslab/transfer.hpp"

namespace {

using namespace copieslab;

constexpr const char* kVersion = "copieslab 1.0.0";

// Thrown for clean early exits with a specific code and message.
struct CliFailure {
    int code;
    std::string message;
};

struct Common {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string json_path;
    std::string dot_path;
};

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// ---- input loading with path-qualified diagnostics ------------------------

std::string describe_parse_error(const std::string& path, const ParseError& e) {
    std::string message = e.what();  // "line N: ..."
    const std::string prefix = "line " + std::to_string(e.line()) + ": ";
    if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
    return path + ":" + std::to_string(e.line()) + ": " + message;
}

Structure load_structure(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_structure(text);
    } catch (const ParseError& e) {
        throw CliFailure{2, describe_parse_error(path, e)};
    }
}

FinitePoset load_poset(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_poset(text);
    } catch (const ParseError& e) {
        throw CliFailure{2, describe_parse_error(path, e)};
    }
}

std::vector<int> parse_arities(const std::string& text) {
    std::vector<int> arities;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string entry =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            const int a = std::stoi(entry, &used);
            if (used != entry.size() || a < 1) throw std::invalid_argument(entry);
            arities.push_back(a);
        } catch (const std::exception&) {
            throw CliFailure{2, "bad arity list '" + text + "': expected positive integers"};
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (arities.empty()) throw CliFailure{2, "empty arity list"};
    return arities;
}

// ---- JSON helpers ----------------------------------------------------------

Json maps_json(const std::vector<InjectionMap>& maps) {
    Json out = Json::array();
    for (const InjectionMap& f : maps) out.push_back(f.assignment);
    return out;
}

Json sets_json(const std::vector<std::vector<int>>& sets) {
    Json out = Json::array();
    for (const std::vector<int>& s : sets) out.push_back(s);
    return out;
}

Json covers_json(const FinitePoset& p) {
    Json out = Json::array();
    for (const auto& [a, b] : cover_pairs(p)) out.push_back(Json::array({a, b}));
    return out;
}

// ---- report and diagram emission -------------------------------------------

void write_dot_if_requested(const Common& c, const std::string& text) {
    if (!c.dot_path.empty()) write_text_file(c.dot_path, text);
}

int finish_report(ReportBuilder& builder, const Common& c) {
    const std::string text = render_report(builder.finish());
    if (c.json_path.empty())
        std::cout << text;
    else
        write_text_file(c.json_path, text);
    return builder.all_passed() ? 0 : 1;
}

CheckRecord make_check(std::string name, std::string statement, bool passed, Json witnesses,
                       double started_ms) {
    return CheckRecord{std::move(name), std::move(statement), passed, std::move(witnesses),
                       now_ms() - started_ms};
}

// ---- corpus cache -----------------------------------------------------------

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

Json corpus_payload(const std::vector<int>& arities, int size, bool up_to_iso,
                    const Corpus& corpus) {
    Json masks = Json::array();
    for (const Structure& x : corpus.interpretations) masks.push_back(interpretation_mask(x));
    return Json{{"arities", arities},
                {"size", size},
                {"up_to_iso", up_to_iso},
                {"masks", masks},
                {"multiplicities", corpus.multiplicities}};
}

std::string cache_file_name(const std::vector<int>& arities, int size, bool up_to_iso) {
    std::string name = "corpus_a";
    for (std::size_t i = 0; i < arities.size(); ++i) {
        if (i) name += '-';
        name += std::to_string(arities[static_cast<std::size_t>(i)]);
    }
    name += "_s" + std::to_string(size) + (up_to_iso ? "_iso" : "_all") + ".json";
    return name;
}

// Loads the corpus from the cache when the key matches and the content hash
// verifies; any mismatch or decoding failure regenerates and rewrites the
// entry.  Status: "disabled" | "hit" | "miss" | "rejected".
Corpus corpus_with_cache(const std::vector<int>& arities, int size, bool up_to_iso,
                         const std::string& cache_dir, std::string& status) {
    const RelationalLanguage language(arities);
    if (cache_dir.empty()) {
        status = "disabled";
        return generate_corpus(language, size, up_to_iso);
    }

    const std::filesystem::path path = std::filesystem::path(cache_dir) /
                                       cache_file_name(arities, size, up_to_iso);
    status = "miss";
    if (std::filesystem::exists(path)) {
        status = "rejected";
        try {
            const Json file = Json::parse(read_text_file(path.string()));
            Json payload = file;
            payload.erase("content_hash");
            if (file.at("arities").get<std::vector<int>>() == arities &&
                file.at("size").get<int>() == size &&
                file.at("up_to_iso").get<bool>() == up_to_iso &&
                file.at("content_hash").get<std::string>() == hash_hex(fnv1a(payload.dump()))) {
                Corpus corpus{language, size, up_to_iso, {}, {}};
                for (const Json& mask : file.at("masks"))
                    corpus.interpretations.push_back(
                        interpretation_from_mask(language, size, mask.get<std::uint64_t>()));
                corpus.multiplicities = file.at("multiplicities").get<std::vector<long long>>();
                if (up_to_iso && corpus.multiplicities.size() != corpus.interpretations.size())
                    throw std::runtime_error("multiplicity mismatch");
                if (corpus.interpretations.empty()) throw std::runtime_error("empty corpus");
                status = "hit";
                return corpus;
            }
        } catch (const std::exception&) {
            // falls through to regeneration
        }
    }

    Corpus corpus = generate_corpus(language, size, up_to_iso);
    Json payload = corpus_payload(arities, size, up_to_iso, corpus);
    payload["content_hash"] = hash_hex(fnv1a(payload.dump()));
    std::filesystem::create_directories(cache_dir);
    write_text_file(path.string(), payload.dump(2) + "\n");
    return corpus;
}

// ---- subcommand bodies ------------------------------------------------------

int run_emb(const Common& c, const std::string& x_path, const std::string& y_path) {
    const Structure x = load_structure(x_path);
    const Structure y = load_structure(y_path);
    ReportBuilder builder("emb");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"x", x_path}, {"y", y_path}});
    const double start = now_ms();
    const EmbeddingSet e = enumerate_embeddings(x, y);
    bool sound = true;
    for (const InjectionMap& f : e.maps) sound = sound && is_embedding(f, x, y);
    builder.add_check(make_check(
        "embeddings", "every enumerated map preserves and reflects all relations", sound,
        Json{{"count", e.maps.size()}, {"maps", maps_json(e.maps)}}, start));
    return finish_report(builder, c);
}

int run_iso(const Common& c, const std::string& x_path, const std::string& y_path) {
    const Structure x = load_structure(x_path);
    const Structure y = load_structure(y_path);
    ReportBuilder builder("iso");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"x", x_path}, {"y", y_path}});
    const double start = now_ms();
    const EmbeddingSet isos = enumerate_isos(x, y);
    bool sound = true;
    for (const InjectionMap& f : isos.maps)
        sound = sound && is_embedding(f, x, y) && f.source_size == f.target_size;
    builder.add_check(make_check(
        "isomorphisms", "every enumerated map is a bijective embedding both ways", sound,
        Json{{"count", isos.maps.size()},
             {"maps", maps_json(isos.maps)},
             {"isomorphic", !isos.maps.empty()}},
        start));
    return finish_report(builder, c);
}

int run_aut(const Common& c, const std::string& x_path) {
    const Structure x = load_structure(x_path);
    ReportBuilder builder("aut");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"x", x_path}});
    const double start = now_ms();
    const EmbeddingSet auts = automorphisms(x);
    bool sound = !auts.maps.empty() && auts.maps.front().assignment == identity_map(x.size).assignment;
    for (const InjectionMap& f : auts.maps) sound = sound && is_embedding(f, x, x);
    builder.add_check(make_check(
        "automorphisms", "the identity leads the list and every map is a self-isomorphism", sound,
        Json{{"count", auts.maps.size()}, {"maps", maps_json(auts.maps)}}, start));
    return finish_report(builder, c);
}

int run_copies(const Common& c, const std::string& x_path, const std::string& y_path) {
    const Structure x = load_structure(x_path);
    const Structure y = load_structure(y_path);
    ReportBuilder builder("copies");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"x", x_path}, {"y", y_path}});
    const double start = now_ms();
    const CopySet cs = copies(x, y);
    bool sound = true;
    for (const std::vector<int>& s : cs.subsets)
        sound = sound && isomorphic(substructure(y, s).structure, x);
    builder.add_check(make_check(
        "copies", "every listed subset induces a substructure isomorphic to the source", sound,
        Json{{"count", cs.subsets.size()}, {"subsets", sets_json(cs.subsets)}}, start));
    write_dot_if_requested(c, emit_hasse_dot(copies_poset(x, y), "copies"));
    return finish_report(builder, c);
}

int run_green(const Common& c, const std::string& x_path) {
    const Structure x = load_structure(x_path);
    ReportBuilder builder("green");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"x", x_path}});
    const double start = now_ms();
    const GreenQuotient g = green_quotient(x);
    builder.add_check(make_check(
        "divisibility-quotient", "the right-divisibility order on self-embeddings, quotiented",
        g.identity_class >= 0,
        Json{{"map_count", g.maps.maps.size()},
             {"classes", sets_json(g.classes.blocks)},
             {"identity_class", g.identity_class},
             {"order_covers", covers_json(g.order)}},
        start));
    const double dual_start = now_ms();
    const bool dual = poset_iso(reversed_poset(g.order), copies_poset(x, x)).has_value();
    builder.add_check(make_check(
        "reversed-order-is-copy-poset",
        "the quotient order reversed is isomorphic to the self-copy poset", dual, Json::object(),
        dual_start));
    write_dot_if_requested(c, emit_hasse_dot(g.order, "green"));
    return finish_report(builder, c);
}

int run_sq(const Common& c, const std::string& p_path) {
    const FinitePoset p = load_poset(p_path);
    ReportBuilder builder("sq");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"poset", p_path}});
    const double start = now_ms();
    const QuotientPoset q = sep_quotient(p);
    bool projection_sound = true;
    for (int i = 0; i < p.size(); ++i)
        projection_sound = projection_sound && q.classes.block_of(i) == q.projection[static_cast<std::size_t>(i)];
    builder.add_check(make_check(
        "separative-quotient", "the quotient order is separative and the projection is consistent",
        is_separative(q.order) && projection_sound,
        Json{{"input_size", p.size()},
             {"input_separative", is_separative(p)},
             {"classes", sets_json(q.classes.blocks)},
             {"projection", q.projection},
             {"order_covers", covers_json(q.order)}},
        start));
    write_dot_if_requested(c, emit_hasse_dot(q.order, "separative_quotient"));
    return finish_report(builder, c);
}

int run_ro(const Common& c, const std::string& p_path) {
    const FinitePoset p = load_poset(p_path);
    ReportBuilder builder("ro");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"poset", p_path}});
    const double start = now_ms();
    const RegularOpenAlgebra algebra = regular_open(p);
    Json atoms = Json::array();
    for (int a : algebra.atoms()) {
        std::vector<int> members;
        for (int e = 0; e < algebra.base().size(); ++e)
            if ((algebra.element(a) >> e) & 1) members.push_back(e);
        atoms.push_back(members);
    }
    bool laws = algebra.size() == (1LL << algebra.atom_count());
    for (int a = 0; a < algebra.size() && laws; ++a) {
        laws = algebra.meet(a, algebra.complement(a)) == algebra.zero() &&
               algebra.join(a, algebra.complement(a)) == algebra.one();
        for (int b = 0; b < algebra.size() && laws; ++b)
            laws = algebra.leq(algebra.meet(a, b), a) && algebra.leq(b, algebra.join(a, b));
    }
    builder.add_check(make_check(
        "completion-algebra",
        "the regular-open family is a Boolean algebra with one element per atom subset", laws,
        Json{{"carrier_size", algebra.size()},
             {"atom_count", algebra.atom_count()},
             {"atoms", atoms},
             {"homogeneous", is_homogeneous_ba(algebra)}},
        start));
    write_dot_if_requested(c, emit_hasse_dot(algebra.carrier_poset(), "completion"));
    return finish_report(builder, c);
}

int run_homog(const Common& c, const std::string& p_path) {
    const FinitePoset p = load_poset(p_path);
    ReportBuilder builder("homog");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"poset", p_path}});

    double start = now_ms();
    const bool quasi = is_quasi_homogeneous(p);
    builder.add_check(make_check(
        "quasi-homogeneous-iff-minimum",
        "dense-set similarity to the whole order holds exactly when a minimum exists",
        quasi == minimum_element(p).has_value(),
        Json{{"quasi_homogeneous", quasi},
             {"weakly_homogeneous", is_weakly_homogeneous(p)},
             {"homogeneous", is_homogeneous(p)}},
        start));

    start = now_ms();
    const QuotientPoset q = sep_quotient(p);
    builder.add_check(make_check(
        "quotient-preserves-quasi-homogeneity",
        "the separative quotient is quasi-homogeneous exactly when the input is",
        is_quasi_homogeneous(q.order) == quasi, Json{{"quotient_size", q.order.size()}}, start));

    start = now_ms();
    const RegularOpenAlgebra algebra = regular_open(p);
    builder.add_check(make_check(
        "completion-homogeneous-iff-one-atom",
        "the completion is homogeneous exactly when it has a single atom",
        is_homogeneous_ba(algebra) == (algebra.atom_count() == 1),
        Json{{"atom_count", algebra.atom_count()}}, start));
    return finish_report(builder, c);
}

int run_classify(const Common& c, const std::string& x_path, const std::string& y_path,
                 const std::string& arities_text, int size, std::int64_t x_mask,
                 std::int64_t y_mask) {
    Json config{{"seed", c.seed}, {"jobs", c.jobs}};
    std::optional<Structure> x, y;
    if (!x_path.empty() || !y_path.empty()) {
        if (x_path.empty() || y_path.empty())
            throw CliFailure{2, "classify needs two structure files (or masks with a language)"};
        x = load_structure(x_path);
        y = load_structure(y_path);
        config["x"] = x_path;
        config["y"] = y_path;
    } else {
        if (arities_text.empty() || size <= 0 || x_mask < 0 || y_mask < 0)
            throw CliFailure{2,
                             "classify needs either two files or --arities, --size, --x-mask and "
                             "--y-mask"};
        const RelationalLanguage language(parse_arities(arities_text));
        x = interpretation_from_mask(language, size, static_cast<std::uint64_t>(x_mask));
        y = interpretation_from_mask(language, size, static_cast<std::uint64_t>(y_mask));
        config["arities"] = arities_text;
        config["size"] = size;
        config["x_mask"] = x_mask;
        config["y_mask"] = y_mask;
    }
    ReportBuilder builder("classify");
    builder.set_config(config);
    const double start = now_ms();
    const SimilarityVector v = classify_pair(*x, *y);
    bool monotone = true;
    for (const HierarchyEdge& e : hierarchy_edges())
        monotone = monotone && (!v.holds[static_cast<std::size_t>(e.lower)] ||
                                v.holds[static_cast<std::size_t>(e.upper)]);
    Json bits = Json::array();
    for (int k = 0; k < kSimilarityCount; ++k) bits.push_back(v.holds[static_cast<std::size_t>(k)]);
    builder.add_check(make_check(
        "classification", "the twelve verdicts respect every implication edge", monotone,
        Json{{"relations", bits},
             {"x_text", emit_structure(*x)},
             {"y_text", emit_structure(*y)}},
        start));
    return finish_report(builder, c);
}

int run_hierarchy(const Common& c, const std::string& arities_text, int size,
                  const std::string& cache_dir) {
    const std::vector<int> arities = parse_arities(arities_text);
    std::string cache_status;
    const Corpus corpus = corpus_with_cache(arities, size, false, cache_dir, cache_status);
    ReportBuilder builder("hierarchy");
    builder.set_config(Json{{"seed", c.seed},
                            {"jobs", c.jobs},
                            {"arities", arities},
                            {"size", size},
                            {"cache", cache_status}});
    const double start = now_ms();
    const HierarchyReport report = verify_hierarchy(corpus, c.jobs);
    builder.add_check(make_check("symmetric", "every relation in the diagram is symmetric",
                                 report.symmetric, Json{{"pairs", report.pair_count}}, start));
    builder.add_check(make_check("transitive", "every relation in the diagram is transitive",
                                 report.transitive, Json::object(), start));
    for (const EdgeStatus& e : report.edges) {
        Json witnesses{{"status", e.status}};
        if (e.status == "proper")
            witnesses["witness"] = Json::array({e.witness_left, e.witness_right});
        builder.add_check(
            make_check(std::string("edge-") + e.label,
                       "relation " + std::to_string(e.lower) + " implies relation " +
                           std::to_string(e.upper) + " on this corpus",
                       true, witnesses, start));
    }
    for (const IncomparabilityRecord& r : report.incomparabilities)
        builder.add_check(make_check(
            "meet-" + std::to_string(r.left) + "-" + std::to_string(r.right),
            "the recorded meet of relations " + std::to_string(r.left) + " and " +
                std::to_string(r.right) + " matches their intersection",
            r.meet_matches, Json{{"meet", r.meet}, {"status", r.status}}, start));
    write_dot_if_requested(c, emit_diagram_dot(report.equal_groups));
    return finish_report(builder, c);
}

int run_collapse(const Common& c, const std::string& arities_text, int size,
                 const std::string& cache_dir) {
    const std::vector<int> arities = parse_arities(arities_text);
    std::string cache_status;
    const Corpus corpus = corpus_with_cache(arities, size, false, cache_dir, cache_status);
    ReportBuilder builder("collapse");
    builder.set_config(Json{{"seed", c.seed},
                            {"jobs", c.jobs},
                            {"arities", arities},
                            {"size", size},
                            {"cache", cache_status}});
    const double start = now_ms();
    const CollapseReport report = finite_collapse_check(corpus, c.jobs);
    builder.add_check(make_check(
        "three-level-collapse",
        "the twelve relations collapse to equality, isomorphism, and the full relation",
        report.passed,
        Json{{"equal_groups", sets_json(report.equal_groups)}, {"failure", report.failure}},
        start));
    builder.add_check(make_check("top-block-full",
                                 "the coarse block relates every pair of interpretations",
                                 report.top_is_full, Json::object(), start));
    builder.add_check(make_check("middle-block-isomorphism",
                                 "the middle block coincides with isomorphism",
                                 report.middle_is_isomorphism, Json::object(), start));
    builder.add_check(make_check(
        "equality-strictly-finer", "some isomorphic pair of distinct interpretations exists",
        report.equality_refinement_witness.first >= 0,
        Json{{"witness", Json::array({report.equality_refinement_witness.first,
                                      report.equality_refinement_witness.second})}},
        start));
    builder.add_check(make_check(
        "isomorphism-strictly-coarser", "some non-isomorphic pair exists",
        report.isomorphism_strictness_witness.first >= 0,
        Json{{"witness", Json::array({report.isomorphism_strictness_witness.first,
                                      report.isomorphism_strictness_witness.second})}},
        start));
    write_dot_if_requested(c, emit_diagram_dot(report.equal_groups));
    return finish_report(builder, c);
}

int run_corpus(const Common& c, const std::string& arities_text, int size, bool up_to_iso,
               const std::string& cache_dir) {
    const std::vector<int> arities = parse_arities(arities_text);
    std::string cache_status;
    const Corpus corpus = corpus_with_cache(arities, size, up_to_iso, cache_dir, cache_status);
    ReportBuilder builder("corpus");
    builder.set_config(Json{{"seed", c.seed},
                            {"jobs", c.jobs},
                            {"arities", arities},
                            {"size", size},
                            {"up_to_iso", up_to_iso},
                            {"cache", cache_status}});
    const double start = now_ms();
    const std::size_t count = corpus.interpretations.size();
    bool round_trip = true;
    Json masks = Json::array();
    for (const Structure& x : corpus.interpretations) {
        const std::uint64_t mask = interpretation_mask(x);
        round_trip =
            round_trip && interpretation_from_mask(corpus.language, size, mask) == x;
        if (count <= 4096) masks.push_back(mask);
    }
    Json witnesses{{"count", count},
                   {"bits", interpretation_bits(corpus.language, size)},
                   {"cache", cache_status}};
    if (count <= 4096) witnesses["masks"] = masks;
    if (up_to_iso) witnesses["multiplicities"] = corpus.multiplicities;
    builder.add_check(make_check("mask-round-trip",
                                 "every interpretation survives the bitmap round trip",
                                 round_trip && count > 0, witnesses, start));
    return finish_report(builder, c);
}

int run_rigid(const Common& c, int size) {
    ReportBuilder builder("rigid");
    builder.set_config(Json{{"seed", c.seed}, {"jobs", c.jobs}, {"size", size}});
    const double start = now_ms();
    const RigidWitness w = find_rigid_digraph(size);
    const EmbeddingSet self = enumerate_embeddings(w.theta, w.theta);
    const bool rigid =
        self.maps.size() == 1 && self.maps.front().assignment == identity_map(size).assignment;
    Json edges = Json::array();
    for (const Tuple& t : w.theta.relations[0]) edges.push_back(Json::array({t[0], t[1]}));
    builder.add_check(make_check(
        "only-trivial-self-embedding", "the identity is the unique self-embedding", rigid,
        Json{{"size", size}, {"edges", edges}, {"structure_text", emit_structure(w.theta)}},
        start));
    return finish_report(builder, c);
}

int run_tau(const Common& c, const std::string& rho_path, const std::string& arities_text,
            int theta_size, bool self_only) {
    const Structure rho = load_structure(rho_path);
    const RelationalLanguage target(parse_arities(arities_text));
    ReportBuilder builder("tau");

    TransferResult result{0, 0, -1, Structure(RelationalLanguage({1}), 1, {TupleSet{}})};
    Json config{{"seed", c.seed}, {"jobs", c.jobs}, {"rho", rho_path}, {"arities", arities_text}};
    std::optional<RigidWitness> theta;
    if (self_only) {
        config["theta_size"] = 0;
        result = tau_self(rho, target);
    } else {
        const int m = theta_size > 0 ? theta_size : rho.size + 1;
        config["theta_size"] = m;
        theta = find_rigid_digraph(m);
        result = tau(rho, target, *theta);
    }
    builder.set_config(config);

    // Re-derive the padded relation literally from its definition.
    const double start = now_ms();
    TupleSet pairs = rho.relations[0];
    if (theta)
        for (const Tuple& t : theta->theta.relations[0])
            pairs.push_back({t[0] + rho.size, t[1] + rho.size});
    const int n = target.arity(result.i0);
    TupleSet expected;
    std::vector<int> tail(static_cast<std::size_t>(n - 2), 0);
    for (const Tuple& p : pairs) {
        std::fill(tail.begin(), tail.end(), 0);
        while (true) {
            Tuple t = {p[0], p[1]};
            t.insert(t.end(), tail.begin(), tail.end());
            expected.push_back(t);
            int d = static_cast<int>(tail.size()) - 1;
            while (d >= 0 && tail[static_cast<std::size_t>(d)] == result.kappa - 1)
                tail[static_cast<std::size_t>(d--)] = 0;
            if (d < 0) break;
            ++tail[static_cast<std::size_t>(d)];
        }
    }
    std::sort(expected.begin(), expected.end());
    bool sound = result.tau.relations[static_cast<std::size_t>(result.i0)] == expected;
    for (int s = 0; s < target.symbol_count(); ++s)
        if (s != result.i0) sound = sound && result.tau.relations[static_cast<std::size_t>(s)].empty();
    Json witnesses{{"lambda", result.lambda},
                   {"kappa", result.kappa},
                   {"i0", result.i0},
                   {"tau_text", emit_structure(result.tau)}};
    if (theta) witnesses["theta_text"] = emit_structure(theta->theta);
    builder.add_check(make_check(
        "padding-matches-definition",
        "the padded symbol carries exactly the merged pairs with every tail, others stay empty",
        sound, witnesses, start));
    return finish_report(builder, c);
}

// Shared pair source for the two transfer verification subcommands.
std::vector<std::pair<int, int>> transfer_pairs(int lambda, int samples, std::uint64_t seed,
                                                std::size_t population) {
    std::vector<std::pair<int, int>> pairs;
    if (samples <= 0) {
        for (std::size_t i = 0; i < population; ++i)
            for (std::size_t j = 0; j < population; ++j)
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    } else {
        std::mt19937_64 rng = make_rng(seed, 0x7a0 + static_cast<std::uint64_t>(lambda));
        for (int t = 0; t < samples; ++t)
            pairs.emplace_back(static_cast<int>(rng_below(rng, population)),
                               static_cast<int>(rng_below(rng, population)));
    }
    return pairs;
}

int run_verify_claim(const Common& c, int lambda, const std::string& arities_text, int theta_size,
                     int samples) {
    const RelationalLanguage target(parse_arities(arities_text));
    const std::vector<Structure> population = enumerate_int_star(lambda);
    const int m = theta_size > 0 ? theta_size : lambda + 1;
    const RigidWitness theta = find_rigid_digraph(m);
    const int effective_samples = samples >= 0 ? samples : (lambda <= 2 ? 0 : 12);
    const std::vector<std::pair<int, int>> pairs =
        transfer_pairs(lambda, effective_samples, c.seed, population.size());

    ReportBuilder builder("verify-claim");
    builder.set_config(Json{{"seed", c.seed},
                            {"jobs", c.jobs},
                            {"lambda", lambda},
                            {"arities", arities_text},
                            {"theta_size", m},
                            {"samples", effective_samples},
                            {"pairs", pairs.size()}});

    std::vector<std::string> names;
    std::vector<bool> holds;
    std::vector<long long> transferred, lifted;
    std::vector<Json> failures;
    const double start = now_ms();
    for (const auto& [i, j] : pairs) {
        const TransferIdentitiesReport report = verify_transfer_identities(
            population[static_cast<std::size_t>(i)], population[static_cast<std::size_t>(j)],
            target, theta);
        if (names.empty()) {
            names.resize(report.identities.size());
            holds.assign(report.identities.size(), true);
            transferred.assign(report.identities.size(), 0);
            lifted.assign(report.identities.size(), 0);
            failures.assign(report.identities.size(), Json());
        }
        for (std::size_t k = 0; k < report.identities.size(); ++k) {
            names[k] = report.identities[k].name;
            transferred[k] += report.identities[k].transferred_count;
            lifted[k] += report.identities[k].lifted_count;
            if (!report.identities[k].holds && holds[k]) {
                holds[k] = false;
                failures[k] = Json::array({i, j});
            }
        }
    }
    for (std::size_t k = 0; k < names.size(); ++k) {
        Json witnesses{{"pairs", pairs.size()},
                       {"transferred_total", transferred[k]},
                       {"lifted_total", lifted[k]}};
        if (!holds[k]) witnesses["first_failure"] = failures[k];
        builder.add_check(make_check(names[k],
                                     "the transferred pair realizes exactly the lifted family",
                                     holds[k], witnesses, start));
    }
    return finish_report(builder, c);
}

int run_verify_preserve(const Common& c, int lambda, const std::string& arities_text,
                        int theta_size, int samples) {
    const RelationalLanguage target(parse_arities(arities_text));
    const std::vector<Structure> population = enumerate_int_star(lambda);
    const int m = theta_size > 0 ? theta_size : lambda + 1;
    const RigidWitness theta = find_rigid_digraph(m);
    const int effective_samples = samples >= 0 ? samples : (lambda <= 2 ? 0 : 12);
    const std::vector<std::pair<int, int>> pairs =
        transfer_pairs(lambda, effective_samples, c.seed, population.size());

    ReportBuilder builder("verify-preserve");
    builder.set_config(Json{{"seed", c.seed},
                            {"jobs", c.jobs},
                            {"lambda", lambda},
                            {"arities", arities_text},
                            {"theta_size", m},
                            {"samples", effective_samples},
                            {"pairs", pairs.size()}});

    std::array<bool, kSimilarityCount> matched{};
    matched.fill(true);
    std::array<bool, kSimilarityCount> direct{};
    std::array<Json, kSimilarityCount> failures{};
    const double start = now_ms();
    for (const auto& [i, j] : pairs) {
        const TransferPreservationReport report = verify_preservation(
            population[static_cast<std::size_t>(i)], population[static_cast<std::size_t>(j)],
            target, theta);
        for (const PreservationCheck& check : report.checks) {
            const std::size_t k = static_cast<std::size_t>(check.relation);
            direct[k] = check.direct;
            if (!check.matches && matched[k]) {
                matched[k] = false;
                failures[k] = Json::array({i, j});
            }
        }
    }
    for (int k = 0; k < kSimilarityCount; ++k) {
        Json witnesses{{"pairs", pairs.size()},
                       {"direct", direct[static_cast<std::size_t>(k)]}};
        if (!matched[static_cast<std::size_t>(k)])
            witnesses["first_failure"] = failures[static_cast<std::size_t>(k)];
        builder.add_check(make_check(
            "relation-" + std::to_string(k),
            "similarity of the base pair is equivalent to similarity of the transferred pair",
            matched[static_cast<std::size_t>(k)], witnesses, start));
    }
    return finish_report(builder, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale laboratory for structure copies, their orders, and similarities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--seed", common.seed, "seed recorded in, and used by, every run");
    app.add_option("--jobs", common.jobs, "worker count for pair grids")
        ->check(CLI::PositiveNumber);
    app.add_option("--json,--out", common.json_path, "write the report here instead of stdout");
    app.add_option("--dot", common.dot_path, "write the applicable diagram here");

    int exit_code = 0;

    std::string emb_x, emb_y;
    CLI::App* emb = app.add_subcommand("emb", "embeddings of one structure into another");
    emb->add_option("x", emb_x, "source structure file")->required();
    emb->add_option("y", emb_y, "target structure file")->required();
    emb->callback([&] { exit_code = run_emb(common, emb_x, emb_y); });

    std::string iso_x, iso_y;
    CLI::App* iso = app.add_subcommand("iso", "isomorphisms between two structures");
    iso->add_option("x", iso_x, "first structure file")->required();
    iso->add_option("y", iso_y, "second structure file")->required();
    iso->callback([&] { exit_code = run_iso(common, iso_x, iso_y); });

    std::string aut_x;
    CLI::App* aut = app.add_subcommand("aut", "automorphisms of a structure");
    aut->add_option("x", aut_x, "structure file")->required();
    aut->callback([&] { exit_code = run_aut(common, aut_x); });

    std::string copies_x, copies_y;
    CLI::App* cop = app.add_subcommand("copies", "copies of one structure inside another");
    cop->add_option("x", copies_x, "source structure file")->required();
    cop->add_option("y", copies_y, "host structure file")->required();
    cop->callback([&] { exit_code = run_copies(common, copies_x, copies_y); });

    std::string green_x;
    CLI::App* grn = app.add_subcommand("green", "divisibility quotient of the self-embeddings");
    grn->add_option("x", green_x, "structure file")->required();
    grn->callback([&] { exit_code = run_green(common, green_x); });

    std::string sq_p;
    CLI::App* sq = app.add_subcommand("sq", "separative quotient of a poset");
    sq->add_option("poset", sq_p, "poset file")->required();
    sq->callback([&] { exit_code = run_sq(common, sq_p); });

    std::string ro_p;
    CLI::App* ro = app.add_subcommand("ro", "regular-open completion of a poset");
    ro->add_option("poset", ro_p, "poset file")->required();
    ro->callback([&] { exit_code = run_ro(common, ro_p); });

    std::string homog_p;
    CLI::App* homog = app.add_subcommand("homog", "homogeneity properties of a poset");
    homog->add_option("poset", homog_p, "poset file")->required();
    homog->callback([&] { exit_code = run_homog(common, homog_p); });

    std::string cls_x, cls_y, cls_arities;
    int cls_size = 0;
    std::int64_t cls_xm = -1, cls_ym = -1;
    CLI::App* cls = app.add_subcommand("classify", "all twelve similarity verdicts for one pair");
    cls->add_option("x", cls_x, "first structure file");
    cls->add_option("y", cls_y, "second structure file");
    cls->add_option("--arities,--language", cls_arities, "comma-separated arity list");
    cls->add_option("--size", cls_size, "domain size");
    cls->add_option("--x-mask", cls_xm, "first interpretation bitmap");
    cls->add_option("--y-mask", cls_ym, "second interpretation bitmap");
    cls->callback([&] {
        exit_code = run_classify(common, cls_x, cls_y, cls_arities, cls_size, cls_xm, cls_ym);
    });

    std::string hier_arities, hier_cache;
    int hier_size = 0;
    CLI::App* hier = app.add_subcommand("hierarchy", "implication diagram over a full corpus");
    hier->add_option("--arities,--language", hier_arities, "comma-separated arity list")
        ->required();
    hier->add_option("--size", hier_size, "domain size")->required();
    hier->add_option("--cache", hier_cache, "corpus cache directory");
    hier->callback([&] { exit_code = run_hierarchy(common, hier_arities, hier_size, hier_cache); });

    std::string col_arities, col_cache;
    int col_size = 0;
    CLI::App* col = app.add_subcommand("collapse", "three-level collapse over a full corpus");
    col->add_option("--arities,--language", col_arities, "comma-separated arity list")->required();
    col->add_option("--size", col_size, "domain size")->required();
    col->add_option("--cache", col_cache, "corpus cache directory");
    col->callback([&] { exit_code = run_collapse(common, col_arities, col_size, col_cache); });

    std::string corpus_arities, corpus_cache;
    int corpus_size = 0;
    bool corpus_iso = false;
    CLI::App* corp = app.add_subcommand("corpus", "enumerate interpretations of a language");
    corp->add_option("--arities,--language", corpus_arities, "comma-separated arity list")
        ->required();
    corp->add_option("--size", corpus_size, "domain size")->required();
    corp->add_flag("--up-to-iso", corpus_iso, "orbit representatives with multiplicities");
    corp->add_option("--cache", corpus_cache, "corpus cache directory");
    corp->callback([&] {
        exit_code = run_corpus(common, corpus_arities, corpus_size, corpus_iso, corpus_cache);
    });

    int rigid_size = 0;
    CLI::App* rig = app.add_subcommand("rigid", "least rigid digraph of a given size");
    rig->add_option("--size", rigid_size, "number of points")->required();
    rig->callback([&] { exit_code = run_rigid(common, rigid_size); });

    std::string tau_rho, tau_arities;
    int tau_theta = -1;
    bool tau_self_only = false;
    CLI::App* tau_cmd = app.add_subcommand("tau", "pad a structure into another language");
    tau_cmd->add_option("--rho", tau_rho, "base structure file")->required();
    tau_cmd->add_option("--arities,--language", tau_arities, "target arity list")->required();
    tau_cmd->add_option("--theta-size", tau_theta, "rigid digraph size (default: domain + 1)");
    tau_cmd->add_flag("--self", tau_self_only, "pad without a digraph part");
    tau_cmd->callback(
        [&] { exit_code = run_tau(common, tau_rho, tau_arities, tau_theta, tau_self_only); });

    int claim_lambda = 0, claim_theta = -1, claim_samples = -1;
    std::string claim_arities;
    CLI::App* claim = app.add_subcommand(
        "verify-claim", "six transfer identities over the admissible population");
    claim->add_option("--lambda", claim_lambda, "base domain size")->required()
        ->check(CLI::Range(1, 3));
    claim->add_option("--arities,--language", claim_arities, "target arity list")->required();
    claim->add_option("--theta-size", claim_theta, "rigid digraph size (default: lambda + 1)");
    claim->add_option("--samples", claim_samples, "sampled pairs; 0 forces exhaustive");
    claim->callback([&] {
        exit_code = run_verify_claim(common, claim_lambda, claim_arities, claim_theta,
                                     claim_samples);
    });

    int pres_lambda = 0, pres_theta = -1, pres_samples = -1;
    std::string pres_arities;
    CLI::App* pres = app.add_subcommand(
        "verify-preserve", "similarity preservation under padding, all twelve relations");
    pres->add_option("--lambda", pres_lambda, "base domain size")->required()
        ->check(CLI::Range(1, 3));
    pres->add_option("--arities,--language", pres_arities, "target arity list")->required();
    pres->add_option("--theta-size", pres_theta, "rigid digraph size (default: lambda + 1)");
    pres->add_option("--samples", pres_samples, "sampled pairs; 0 forces exhaustive");
    pres->callback([&] {
        exit_code = run_verify_preserve(common, pres_lambda, pres_arities, pres_theta,
                                        pres_samples);
    });

    CLI::App* accept = app.add_subcommand("accept", "run the full acceptance suite");
    accept->callback([&] {
        const acceptance::SuiteResult result =
            acceptance::run_all(std::cout, common.seed, common.jobs);
        exit_code = result.all_passed ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
