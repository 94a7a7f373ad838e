// Command-line driver: ingestion -> statistics -> normalization ->
// classification -> reports and figures.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "formant/corpus.hpp"
#include "formant/evaluate.hpp"
#include "formant/figures.hpp"
#include "formant/plot.hpp"
#include "formant/reproduce.hpp"

namespace {

using formant::Corpus;
using formant::Method;
using formant::PoolMode;
using formant::SplitMode;
using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string input;
    std::string format = "pb";
    std::vector<std::string> exclude = {"ER"};
    bool keep_er = false;
    bool drop_flagged = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    const char* env = std::getenv("FORMANT_NORM_DATA");
    if (env) opts.input = env;
    cmd->add_option("-i,--input", opts.input, "corpus file (default: $FORMANT_NORM_DATA)");
    cmd->add_option("--input-format", opts.format, "input format: pb or csv")
        ->check(CLI::IsMember({"pb", "csv"}));
    cmd->add_option("--exclude-vowels", opts.exclude,
                    "vowel codes excluded from the working set (default: ER)");
    cmd->add_flag("--keep-er", opts.keep_er, "keep the retroflex vowel ER");
    cmd->add_flag("--drop-flagged", opts.drop_flagged,
                  "drop rows carrying the non-unanimous label marker");
}

Corpus load_corpus(const CommonOpts& opts) {
    if (opts.input.empty())
        throw formant::IOFailure("corpus: no input file (use --input or FORMANT_NORM_DATA)");
    std::ifstream in(opts.input, std::ios::binary);
    if (!in) throw formant::IOFailure("corpus: cannot open " + opts.input);
    Corpus c = formant::parse_corpus(
        in, opts.format == "pb" ? formant::CorpusFormat::PBTable : formant::CorpusFormat::Csv,
        opts.input);
    if (opts.drop_flagged) {
        Corpus kept;
        kept.provenance = c.provenance;
        for (const auto& s : c.samples)
            if (!s.flagged) kept.samples.push_back(s);
        c = std::move(kept);
    }
    std::set<formant::VowelClass> keep(formant::kAllVowels.begin(), formant::kAllVowels.end());
    if (!opts.keep_er)
        for (const auto& code : opts.exclude) {
            auto v = formant::vowel_from_code(code);
            if (!v) throw formant::Error("unknown vowel code in --exclude-vowels: " + code);
            keep.erase(*v);
        }
    return formant::filter_vowels(c, keep);
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw formant::IOFailure("cannot open output file " + path);
    return file;
}

PoolMode parse_pool(const std::string& s) {
    return s == "mw" ? PoolMode::MW : PoolMode::MWC;
}

SplitMode parse_split(const std::string& s) {
    if (s == "insample") return SplitMode::InSample;
    if (s == "traintest") return SplitMode::TrainTest;
    return SplitMode::TrainOnTrain;
}

Corpus pooled_corpus(const CommonOpts& opts, PoolMode pool) {
    return formant::pool(load_corpus(opts),
                         pool == PoolMode::MW ? formant::groups_mw() : formant::groups_mwc());
}

int cmd_ingest(const CommonOpts& opts, const std::string& output) {
    const Corpus c = load_corpus(opts);
    std::ofstream file;
    formant::write_csv(c, open_sink(file, output));
    return 0;
}

int cmd_stats(const CommonOpts& opts, const std::string& method_name, const std::string& pool,
              const std::string& space_name, const std::string& output) {
    const PoolMode pm = parse_pool(pool);
    const Corpus pooled = pooled_corpus(opts, pm);
    const auto method = formant::method_from_name(method_name);
    if (!method) throw formant::Error("unknown method " + method_name);

    formant::VowelStatistics stats;
    if (*method == Method::Raw) {
        stats = formant::vowel_stats(
            pooled, space_name == "mel" ? formant::Space::Mel : formant::Space::Hz, "raw", pool);
    } else {
        const auto ctx = formant::build_context(pooled, *method, pool);
        const auto pts = formant::map_corpus(pooled, ctx);
        std::vector<formant::LabeledPoint> lp;
        for (const auto& p : pts) lp.push_back({p.label, {p.x1, p.x2, 0.0}});
        stats = formant::vowel_stats(lp, 2, ctx.feature_space, method_name, pool);
    }

    const bool dimensionless = (*method == Method::Intrinsic || *method == Method::Lobanov ||
                                *method == Method::Wattfab);
    const char* space_tag =
        dimensionless ? "dimensionless" : formant::space_name(stats.space);
    std::ofstream file;
    std::ostream& out = open_sink(file, output);
    out << "stage,space,pool,vowel,formant,mean,sd\n";
    char buf[64];
    for (const auto& [v, m] : stats.by_vowel)
        for (int i = 0; i < stats.dims; ++i) {
            std::snprintf(buf, sizeof(buf), "%.6f,%.6f", m.mean[static_cast<std::size_t>(i)],
                          m.sd[static_cast<std::size_t>(i)]);
            out << stats.stage << ',' << space_tag << ',' << pool << ','
                << formant::vowel_code(v) << ',' << (i + 1) << ',' << buf << '\n';
        }
    return 0;
}

int cmd_normalize(const CommonOpts& opts, const std::string& method_name,
                  const std::string& pool, const std::string& output) {
    const auto method = formant::method_from_name(method_name);
    if (!method || *method == Method::Raw)
        throw formant::Error("normalize: method must be one of intrinsic|gmagm|iht|lobanov|wattfab");
    const Corpus pooled = pooled_corpus(opts, parse_pool(pool));
    const auto ctx = formant::build_context(pooled, *method, pool);

    std::ofstream file;
    std::ostream& out = open_sink(file, output);
    const bool three_dims =
        (*method == Method::Intrinsic || *method == Method::Gmagm || *method == Method::Iht);
    out << "speaker_id,group,vowel,repetition,x1,x2" << (three_dims ? ",x3" : "") << ",space"
        << (*method == Method::Iht ? ",predicted_vowel" : "") << "\n";
    char buf[96];
    for (const auto& s : pooled.samples) {
        const auto p = formant::map_sample(s, ctx);
        double x3 = 0.0;
        if (*method == Method::Intrinsic) x3 = formant::intrinsic_normalize(s).nf[2];
        if (*method == Method::Gmagm)
            x3 = formant::hz_to_mel(
                formant::denormalize_gmagm(formant::intrinsic_normalize(s), s.vowel, ctx.raw_hz)
                    .df_hz[2]);
        if (*method == Method::Iht)
            x3 = formant::hz_to_mel(
                formant::iht_denormalize(formant::intrinsic_normalize(s), ctx.raw_hz,
                                         ctx.denorm_mel)
                    .df_hz[2]);
        out << s.speaker_id << ',' << formant::group_name(s.group) << ','
            << formant::vowel_code(s.vowel) << ',' << s.repetition << ',';
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f", p.x1, p.x2);
        out << buf;
        if (three_dims) {
            std::snprintf(buf, sizeof(buf), ",%.6f", x3);
            out << buf;
        }
        const char* space = (*method == Method::Gmagm || *method == Method::Iht)
                                ? "mel"
                                : "dimensionless";
        out << ',' << space;
        if (*method == Method::Iht) out << ',' << formant::vowel_code(*p.predicted);
        out << '\n';
    }
    return 0;
}

int cmd_classify(const CommonOpts& opts, const std::string& method_name, const std::string& pool,
                 const std::string& split, const std::string& output) {
    const auto method = formant::method_from_name(method_name);
    if (!method) throw formant::Error("unknown method " + method_name);
    const auto report =
        formant::evaluate(load_corpus(opts), *method, parse_pool(pool), parse_split(split));

    json j;
    j["method"] = report.method;
    j["pool"] = formant::pool_name(report.pool);
    j["split"] = formant::split_name(report.split);
    j["total"] = report.total;
    j["correct"] = report.correct;
    j["accuracy"] = report.accuracy;
    json confusion = json::object();
    for (formant::VowelClass t : formant::kAllVowels) {
        json row = json::object();
        for (formant::VowelClass p : formant::kAllVowels) {
            const auto n = report.confusion[static_cast<std::size_t>(t)]
                                           [static_cast<std::size_t>(p)];
            if (n) row[std::string(formant::vowel_code(p))] = n;
        }
        if (!row.empty()) confusion[std::string(formant::vowel_code(t))] = row;
    }
    j["confusion"] = confusion;

    std::ofstream file;
    open_sink(file, output) << j.dump(2) << '\n';
    return 0;
}

int cmd_plot(const CommonOpts& opts, const std::string& method_name, const std::string& pool,
             const std::string& output, const std::string& format) {
    const auto method = formant::method_from_name(method_name);
    if (!method) throw formant::Error("unknown method " + method_name);
    const Corpus pooled = pooled_corpus(opts, parse_pool(pool));
    const bool triangles = (*method != Method::Intrinsic && *method != Method::Gmagm);
    const auto spec = formant::scatter_for_method(
        pooled, *method, std::string(formant::method_name(*method)) + " formant data", triangles);
    std::ofstream file;
    formant::emit_scatter(spec, open_sink(file, output),
                          format == "csv" ? formant::PlotFormat::Csv : formant::PlotFormat::Svg);
    return 0;
}

int cmd_plot_rays(const CommonOpts& opts, const std::string& mode, const std::string& sample_ref,
                  const std::string& output) {
    const Corpus pooled = pooled_corpus(opts, PoolMode::MWC);

    formant::FormantSample sample;
    if (sample_ref.empty()) {
        sample = formant::pick_ray_sample(pooled);
    } else {
        std::istringstream ss(sample_ref);
        std::string spk, vow, rep;
        if (!std::getline(ss, spk, ':') || !std::getline(ss, vow, ':') || !std::getline(ss, rep))
            throw formant::Error("plot-rays: --sample must be SPEAKER:VOWEL:REP");
        const auto v = formant::vowel_from_code(vow);
        if (!v) throw formant::Error("plot-rays: unknown vowel " + vow);
        const int id = std::stoi(spk), r = std::stoi(rep);
        bool found = false;
        for (const auto& s : pooled.samples)
            if (s.speaker_id == id && s.vowel == *v && s.repetition == r) {
                sample = s;
                found = true;
                break;
            }
        if (!found) throw formant::Error("plot-rays: sample " + sample_ref + " not in corpus");
    }

    const auto spec = mode == "iht" ? formant::rays_iht(pooled, sample)
                                    : formant::rays_raw(pooled, sample);
    std::ofstream file;
    formant::emit_distance_rays(spec, open_sink(file, output));
    return 0;
}

int cmd_reproduce_all(const CommonOpts& opts, const std::string& out_dir) {
    const Corpus c = load_corpus(opts);
    const auto summary = formant::run_reproduce_all(c, out_dir);
    formant::write_summary_table(summary, std::cout);
    return summary.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vowel formant normalization toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string method = "raw", pool = "mwc", split = "insample", space = "mel";
    std::string output, out_dir = "reproduction", plot_format = "svg", rays_mode = "raw";
    std::string sample_ref;

    auto* ingest = app.add_subcommand("ingest", "parse a corpus and emit the canonical CSV");
    add_common(ingest, opts);
    ingest->add_option("-o,--output", output, "output file (default: stdout)");

    auto* stats = app.add_subcommand("stats", "per-vowel statistics CSV");
    add_common(stats, opts);
    stats->add_option("--method", method, "stage: raw|intrinsic|gmagm|iht|lobanov|wattfab");
    stats->add_option("--pool", pool)->check(CLI::IsMember({"mw", "mwc"}));
    stats->add_option("--space", space)->check(CLI::IsMember({"hz", "mel"}));
    stats->add_option("-o,--output", output);

    auto* normalize = app.add_subcommand("normalize", "emit per-sample normalized features");
    add_common(normalize, opts);
    normalize->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"intrinsic", "gmagm", "iht", "lobanov", "wattfab"}));
    normalize->add_option("--pool", pool)->check(CLI::IsMember({"mw", "mwc"}));
    normalize->add_option("-o,--output", output);

    auto* classify = app.add_subcommand("classify", "run the evaluation protocol");
    add_common(classify, opts);
    classify->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"raw", "gmagm", "iht", "lobanov", "wattfab"}));
    classify->add_option("--pool", pool)->check(CLI::IsMember({"mw", "mwc"}));
    classify->add_option("--split", split)
        ->check(CLI::IsMember({"insample", "traintest", "trainontrain"}));
    classify->add_option("-o,--output", output);

    auto* plot = app.add_subcommand("plot", "scatter figure (SVG or plot-ready CSV)");
    add_common(plot, opts);
    plot->add_option("--method", method)->required();
    plot->add_option("--pool", pool)->check(CLI::IsMember({"mw", "mwc"}));
    plot->add_option("-o,--output", output)->required();
    plot->add_option("--format", plot_format)->check(CLI::IsMember({"svg", "csv"}));

    auto* rays = app.add_subcommand("plot-rays", "distance-ray illustration");
    add_common(rays, opts);
    rays->add_option("--mode", rays_mode)->check(CLI::IsMember({"raw", "iht"}));
    rays->add_option("--sample", sample_ref, "SPEAKER:VOWEL:REP (default: auto-picked /AA/)");
    rays->add_option("-o,--output", output)->required();

    auto* repro = app.add_subcommand("reproduce-all",
                                     "recompute every reported number and emit all figures");
    add_common(repro, opts);
    repro->add_option("--output-dir", out_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return cmd_ingest(opts, output);
        if (*stats) return cmd_stats(opts, method, pool, space, output);
        if (*normalize) return cmd_normalize(opts, method, pool, output);
        if (*classify) return cmd_classify(opts, method, pool, split, output);
        if (*plot) return cmd_plot(opts, method, pool, output, plot_format);
        if (*rays) return cmd_plot_rays(opts, rays_mode, sample_ref, output);
        if (*repro) return cmd_reproduce_all(opts, out_dir);
    } catch (const formant::IOFailure& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const formant::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
