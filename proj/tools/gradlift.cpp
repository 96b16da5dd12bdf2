// gradlift command line: analyze job files, semigroup rings, random corpora.

#include <gradlift/gradlift.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { Ok = 0, BadInput = 1, Capped = 2, Violation = 3 };

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw gradlift::InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw gradlift::InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

int emit(const gradlift::AnalysisReport& r, const std::string& json_path, bool quiet)
{
    if (!quiet)
        std::cout << gradlift::render_text(r);
    if (!json_path.empty())
        write_json(json_path, gradlift::to_json(r));
    return r.capped.empty() ? Ok : Capped;
}

nlohmann::json corpus_json(const gradlift::CorpusSummary& s)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["recipe"] = s.recipe;
    j["seed"] = s.seed;
    j["count"] = s.count;
    j["failures"] = s.failures;
    j["capped"] = s.capped;
    j["lex_capped"] = s.lex_capped;
    j["componentwise_linear"] = s.componentwise_linear;
    j["ld_zero"] = s.ld_zero;
    j["hypotheses_held"] = s.hypotheses_held;
    j["converse_candidates"] = s.converse_candidates;
    j["findings"] = s.findings;
    j["timing"] = {{"seconds", s.seconds}};
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gradlift: tangent cones, lifted resolutions and Betti numbers of local ideals"};
    app.require_subcommand(1);

    std::string file, json_path;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
    auto* analyze = app.add_subcommand("analyze", "run the analyses requested in a job file");
    analyze->add_option("file", file, "job file ('-' for stdin)")->required();
    analyze->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    analyze->add_option("--seed", seed, "override the job's seed");
    analyze->add_flag("-q,--quiet", quiet, "no text report");

    std::vector<int> exps;
    std::string which = "full";
    auto* semi = app.add_subcommand("semigroup", "analyze the ideal of the monomial curve t^a1, ..., t^an");
    semi->add_option("exponents", exps, "a1 a2 ...")->required();
    semi->add_option("--analyze", which, "comma-separated analyses (default full)");
    semi->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    semi->add_option("--seed", seed, "random seed");
    semi->add_flag("-q,--quiet", quiet, "no text report");

    std::string recipe;
    int count = 0;
    std::uint64_t corpus_seed = 1;
    unsigned threads = 0;
    auto* corpus = app.add_subcommand("corpus", "property checks over seeded random instances");
    corpus->add_option("--recipe", recipe, "monomial | binomial | borel | super-regular | local-binomial | principal")
        ->required();
    corpus->add_option("--count", count, "number of instances")->required()->check(CLI::NonNegativeNumber);
    corpus->add_option("--seed", corpus_seed, "base seed; instance i uses seed + i");
    corpus->add_option("--threads", threads, "worker threads (0 = hardware)");
    corpus->add_option("--json", json_path, "write the summary here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    try {
        if (*analyze) {
            std::string text;
            if (file == "-") {
                std::ostringstream s;
                s << std::cin.rdbuf();
                text = s.str();
            } else {
                text = slurp(file);
            }
            auto job = gradlift::parse_job(text);
            if (seed)
                job.seed = *seed;
            return emit(gradlift::run_analysis(job), json_path, quiet);
        }
        if (*semi) {
            std::string text = "semigroup";
            for (int e : exps)
                text += " " + std::to_string(e);
            text += "; analyze " + which + ";";
            if (seed)
                text += " seed " + std::to_string(*seed) + ";";
            return emit(gradlift::run_analysis(gradlift::parse_job(text)), json_path, quiet);
        }
        if (*corpus) {
            auto s = gradlift::corpus_run(recipe, count, corpus_seed, threads);
            std::cout << s.recipe << ": " << s.count << " instances, " << s.failures << " with fatal findings, "
                      << s.capped << " capped, " << s.lex_capped << " with Lex capped\n";
            if (gradlift::is_graded_recipe(recipe))
                std::cout << "  componentwise linear " << s.componentwise_linear << ", ld = 0 " << s.ld_zero << "\n";
            else
                std::cout << "  hypotheses held " << s.hypotheses_held << ", converse candidates "
                          << s.converse_candidates << "\n";
            for (const auto& f : s.findings)
                std::cout << "  " << f << "\n";
            std::cout << "  " << s.seconds << " s\n";
            if (!json_path.empty())
                write_json(json_path, corpus_json(s));
            if (s.failures > 0)
                return Violation;
            return s.capped > 0 ? Capped : Ok;
        }
    } catch (const gradlift::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const gradlift::OverflowError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const gradlift::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return Capped;
    } catch (const gradlift::InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return Violation;
    }
    return Ok;
}
