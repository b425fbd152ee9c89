// turgec: generate, inspect, and score Turkish grammatical-error corpora.
//
// Subcommands:
//   generate   corrupt a clean corpus into train/val/test annotation files
//   corrupt    corrupt a single sentence and print its annotation record
//   correct    detect and fix errors in sentences or annotation files
//   score      evaluate correction (F0.5) or detection (macro F1)
//   validate   round-trip check an annotation file
//   stats      per-rule counts of an annotation file
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turgec/turgec.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::string text = read_file(path);
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

json report_to_json(const turgec::GenerationReport& r) {
    json j;
    j["seed"] = r.seed;
    j["config_digest"] = r.config_digest;
    j["input_lines"] = r.input_lines;
    j["unique_sentences"] = r.unique_sentences;
    j["duplicates_removed"] = r.duplicates_removed;
    j["emitted"] = r.emitted;
    j["dropped"] = r.dropped;
    j["error_free"] = r.error_free;
    j["error_free_share"] =
        r.emitted ? static_cast<double>(r.error_free) / r.emitted : 0.0;
    j["total_annotations"] = r.total_annotations();
    j["splits"] = {{"train", r.split_sizes[0]},
                   {"val", r.split_sizes[1]},
                   {"test", r.split_sizes[2]}};
    j["rule_counts"] = json::object();
    for (const auto& [name, count] : r.rule_counts) j["rule_counts"][name] = count;
    j["high_drop_warning"] = r.high_drop_warning;
    return j;
}

std::vector<turgec::Sentence> sentences_from_path(const std::string& path) {
    std::vector<turgec::Sentence> out;
    if (path.size() > 3 && path.substr(path.size() - 3) == ".m2") {
        for (const auto& pair : turgec::parse(read_file(path)))
            out.push_back(pair.tokens);
    } else {
        for (const std::string& line : read_lines(path)) {
            std::string norm = turgec::normalize_sentence(line);
            if (!norm.empty()) out.push_back(turgec::split_tokens(norm));
        }
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Turkish grammatical-error corpus toolkit"};
    app.require_subcommand(1);

    std::string lexicon_dir;
    if (const char* env = std::getenv("TURGEC_LEXICON_DIR")) lexicon_dir = env;
    app.add_option("--lexicon-dir", lexicon_dir,
                   "directory with NAME.tsv lexicon overrides "
                   "(default: $TURGEC_LEXICON_DIR)");

    // --- generate ---
    auto* gen = app.add_subcommand("generate",
                                   "corrupt a clean corpus into train/val/test files");
    std::string gen_input, gen_config, gen_out = ".";
    uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    unsigned gen_threads = 1;
    gen->add_option("--input", gen_input, "clean corpus, one sentence per line")
        ->required();
    gen->add_option("--config", gen_config, "pipeline config file");
    gen->add_option("--out", gen_out, "output directory")->required();
    gen->add_option("--seed", gen_seed, "master seed (overrides config)")
        ->each([&](const std::string&) { gen_seed_set = true; });
    gen->add_option("--threads", gen_threads, "worker threads")
        ->check(CLI::Range(1u, 256u));

    // --- corrupt ---
    auto* cor = app.add_subcommand("corrupt",
                                   "corrupt one sentence and print its record");
    std::string cor_sentence;
    std::vector<std::string> cor_rules;
    double cor_p = 1.0;
    uint64_t cor_seed = 42;
    cor->add_option("--sentence", cor_sentence, "tokenized sentence")->required();
    cor->add_option("--rules", cor_rules,
                    "rule ids to enable (default: all)")
        ->delimiter(',');
    cor->add_option("--p", cor_p, "probability for the enabled rules");
    cor->add_option("--seed", cor_seed, "seed");

    // --- correct ---
    auto* fix = app.add_subcommand("correct",
                                   "detect and fix errors by reverse transformation");
    std::string fix_sentence, fix_input;
    bool fix_emit_m2 = false;
    fix->add_option("--sentence", fix_sentence, "tokenized sentence");
    fix->add_option("--input", fix_input,
                    "file of sentences (or .m2: gold S lines are used)");
    fix->add_flag("--emit-m2", fix_emit_m2,
                  "print hypothesis records instead of corrected text");

    // --- score ---
    auto* sc = app.add_subcommand("score", "evaluate correction or detection");
    std::string sc_task, sc_hyp, sc_gold;
    bool sc_token_level = false;
    sc->add_option("task", sc_task, "correction | detection")->required();
    sc->add_option("--hyp", sc_hyp,
                   "hypothesis file (text for correction, .m2 for detection)")
        ->required();
    sc->add_option("--gold", sc_gold, "gold .m2 file")->required();
    sc->add_flag("--token-level", sc_token_level,
                 "detection only: token-level credit instead of span-level");

    // --- validate ---
    auto* val = app.add_subcommand("validate",
                                   "round-trip check every record of an .m2 file");
    std::string val_m2;
    val->add_option("--m2", val_m2, "annotation file")->required();

    // --- stats ---
    auto* st = app.add_subcommand("stats", "per-rule counts of an .m2 file");
    std::string st_m2;
    st->add_option("--m2", st_m2, "annotation file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }

    turgec::LexiconSet lexicons = turgec::seed::load_lexicons(lexicon_dir);
    turgec::RuleEngine engine(lexicons);

    if (gen->parsed()) {
        turgec::PipelineConfig cfg = turgec::PipelineConfig::defaults();
        if (!gen_config.empty()) cfg = turgec::parse_config(read_file(gen_config));
        if (gen_seed_set) cfg.seed = gen_seed;
        if (!cfg.lexicon_dir.empty() && lexicon_dir.empty()) {
            lexicons = turgec::seed::load_lexicons(cfg.lexicon_dir);
            engine = turgec::RuleEngine(lexicons);
        }
        std::vector<std::string> lines = read_lines(gen_input);
        bool any = false;
        for (const auto& l : lines)
            if (!turgec::normalize_sentence(l).empty()) any = true;
        if (!any) throw UsageError("input file has no sentences: " + gen_input);

        turgec::GenerationResult res =
            turgec::generate_corpus(lines, cfg, engine, gen_threads);
        fs::create_directories(gen_out);
        write_file((fs::path(gen_out) / "train.m2").string(),
                   turgec::serialize_corpus(res.splits[0]));
        write_file((fs::path(gen_out) / "val.m2").string(),
                   turgec::serialize_corpus(res.splits[1]));
        write_file((fs::path(gen_out) / "test.m2").string(),
                   turgec::serialize_corpus(res.splits[2]));
        json j = report_to_json(res.report);
        write_file((fs::path(gen_out) / "report.json").string(), j.dump(2) + "\n");
        std::cout << "seed " << res.report.seed << ", " << res.report.emitted
                  << " records (" << res.report.error_free << " error-free, "
                  << res.report.dropped << " dropped), splits "
                  << res.report.split_sizes[0] << "/" << res.report.split_sizes[1]
                  << "/" << res.report.split_sizes[2] << " -> " << gen_out
                  << "\n";
        if (res.report.high_drop_warning)
            std::cerr << "warning: round-trip filter dropped more than half of "
                         "the corrupted sentences\n";
        return 0;
    }

    if (cor->parsed()) {
        turgec::PipelineConfig cfg = turgec::PipelineConfig::defaults();
        cfg.seed = cor_seed;
        cfg.error_free_fraction = 0.0;
        if (!cor_rules.empty()) {
            cfg.enabled_rules.clear();
            for (const std::string& name : cor_rules) {
                auto id = turgec::rule_from_name(name);
                if (!id) throw UsageError("unknown rule: " + name);
                cfg.enabled_rules.insert(*id);
                cfg.probabilities[*id] = cor_p;
            }
        } else {
            for (auto& [id, _] : cfg.probabilities) cfg.probabilities[id] = cor_p;
        }
        cfg.validate();
        turgec::Sentence tokens =
            turgec::split_tokens(turgec::normalize_sentence(cor_sentence));
        if (tokens.empty()) throw UsageError("empty sentence");
        turgec::RngStream rng =
            turgec::RngStream::derive(cfg.seed, turgec::rng_purpose::kSentence, 0);
        turgec::AnnotatedPair pair =
            turgec::corrupt_sentence(tokens, engine, cfg, rng);
        std::cout << "# seed " << cfg.seed << "\n";
        std::cout << turgec::join_tokens(pair.tokens) << "\n";
        std::cout << turgec::serialize(pair);
        return 0;
    }

    if (fix->parsed()) {
        std::vector<turgec::Sentence> inputs;
        if (!fix_sentence.empty()) {
            inputs.push_back(
                turgec::split_tokens(turgec::normalize_sentence(fix_sentence)));
        } else if (!fix_input.empty()) {
            inputs = sentences_from_path(fix_input);
        } else {
            throw UsageError("correct: provide --sentence or --input");
        }
        for (const turgec::Sentence& tokens : inputs) {
            std::vector<turgec::Detection> dets = turgec::detect(engine, tokens);
            if (fix_emit_m2) {
                turgec::AnnotatedPair hyp;
                hyp.tokens = tokens;
                for (const turgec::Detection& d : dets) {
                    std::vector<std::string> repl = engine.apply_reverse(
                        d.rule, tokens, turgec::Span{d.start, d.end});
                    hyp.edits.push_back(turgec::Edit{
                        d.start, d.end, d.rule, turgec::join_tokens(repl)});
                }
                std::cout << turgec::serialize(hyp) << "\n";
            } else {
                std::cout << turgec::join_tokens(
                                 turgec::correct(engine, tokens, dets))
                          << "\n";
            }
        }
        return 0;
    }

    if (sc->parsed()) {
        if (sc_task == "correction") {
            std::vector<turgec::AnnotatedPair> gold =
                turgec::parse(read_file(sc_gold));
            std::vector<turgec::Sentence> hyps;
            for (const std::string& line : read_lines(sc_hyp)) {
                std::string norm = turgec::normalize_sentence(line);
                if (!norm.empty()) hyps.push_back(turgec::split_tokens(norm));
            }
            turgec::ScoreReport rep = turgec::score_correction(hyps, gold);
            std::cout << "correction  P " << rep.precision << "  R " << rep.recall
                      << "  F0.5 " << rep.f_score << "  (matched " << rep.matched
                      << ", proposed " << rep.proposed << ", gold " << rep.gold
                      << ")\n";
            json j = {{"task", "correction"},   {"precision", rep.precision},
                      {"recall", rep.recall},   {"f0.5", rep.f_score},
                      {"matched", rep.matched}, {"proposed", rep.proposed},
                      {"gold", rep.gold}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (sc_task == "detection") {
            std::vector<turgec::AnnotatedPair> gold =
                turgec::parse(read_file(sc_gold));
            std::vector<turgec::AnnotatedPair> hyp =
                turgec::parse(read_file(sc_hyp));
            std::vector<turgec::LabelSequence> gl, pl;
            for (const auto& p : gold) gl.push_back(turgec::labels_from_pair(p));
            for (const auto& p : hyp) pl.push_back(turgec::labels_from_pair(p));
            turgec::ScoreReport rep =
                turgec::score_detection(pl, gl, sc_token_level);
            std::cout << "detection  macro P " << rep.precision << "  R "
                      << rep.recall << "  F1 " << rep.f_score << "  ("
                      << rep.per_class.size() << " classes, "
                      << (sc_token_level ? "token" : "span") << " level)\n";
            for (const auto& c : rep.per_class)
                std::cout << "  " << c.label << "  P " << c.precision << "  R "
                          << c.recall << "  F1 " << c.f_score << "  (" << c.matched
                          << "/" << c.proposed << "/" << c.gold << ")\n";
            json j = {{"task", "detection"},
                      {"level", sc_token_level ? "token" : "span"},
                      {"macro_precision", rep.precision},
                      {"macro_recall", rep.recall},
                      {"macro_f1", rep.f_score}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        throw UsageError("score: task must be 'correction' or 'detection'");
    }

    if (val->parsed()) {
        std::vector<turgec::AnnotatedPair> pairs =
            turgec::parse(read_file(val_m2));
        size_t bad = 0;
        for (size_t r = 0; r < pairs.size(); ++r) {
            const turgec::AnnotatedPair& pair = pairs[r];
            turgec::Sentence restored = pair.tokens;
            bool ok = true;
            for (size_t k = pair.edits.size(); k > 0 && ok; --k) {
                const turgec::Edit& e = pair.edits[k - 1];
                try {
                    std::vector<std::string> rev = engine.apply_reverse(
                        e.rule, restored, turgec::Span{e.start, e.end});
                    if (turgec::join_tokens(rev) != e.correction) ok = false;
                    restored.erase(
                        restored.begin() + static_cast<ptrdiff_t>(e.start),
                        restored.begin() + static_cast<ptrdiff_t>(e.end));
                    restored.insert(restored.begin() + static_cast<ptrdiff_t>(e.start),
                                    rev.begin(), rev.end());
                } catch (const turgec::ReverseError&) {
                    ok = false;
                }
            }
            if (!ok) {
                ++bad;
                std::cerr << "record " << (r + 1) << ": round-trip failed\n";
            }
        }
        std::cout << pairs.size() << " records, " << bad << " failed round-trip\n";
        return bad ? 2 : 0;
    }

    if (st->parsed()) {
        std::vector<turgec::AnnotatedPair> pairs = turgec::parse(read_file(st_m2));
        std::map<std::string, size_t> counts;
        size_t error_free = 0, annotations = 0;
        for (const auto& p : pairs) {
            if (p.edits.empty()) ++error_free;
            for (const auto& e : p.edits) {
                ++counts[std::string(turgec::rule_name(e.rule))];
                ++annotations;
            }
        }
        std::cout << "records        " << pairs.size() << "\n";
        std::cout << "annotations    " << annotations << "\n";
        std::cout << "error-free     " << error_free;
        if (!pairs.empty())
            std::cout << "  (" << (100.0 * error_free / pairs.size()) << "%)";
        std::cout << "\n";
        for (const auto& [name, count] : counts)
            std::cout << "  " << name << "  " << count << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
