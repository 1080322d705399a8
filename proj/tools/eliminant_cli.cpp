#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eliminant/script.hpp"

namespace {

int threads_default() {
    if (const char* env = std::getenv("ELIMINANT_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eliminant: exact resultants, discriminants, and Chow forms"};

    std::string script_file;
    std::string algorithm = "auto";
    std::string format = "text";
    std::uint64_t seed = 0;
    bool timing = false;
    int threads = threads_default();

    app.add_option("script", script_file,
                   "script file ('-' or omitted reads stdin)");
    app.add_option("--algorithm", algorithm, "auto|poisson|macaulay|interpolate")
        ->check(CLI::IsMember({"auto", "poisson", "macaulay", "interpolate"}));
    app.add_option("--seed", seed, "seed for randomized retries (default 0)");
    app.add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", timing, "report elapsed time");
    app.add_option("--threads", threads,
                   "worker threads (env ELIMINANT_THREADS)");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (script_file.empty() || script_file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(script_file);
        if (!in) {
            std::cerr << "error: cannot open " << script_file << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    eliminant::RunFlags flags;
    flags.seed = seed;
    flags.timing = timing;
    flags.threads = threads > 0 ? threads : 1;
    if (algorithm == "poisson")
        flags.algorithm = eliminant::ResultantAlgorithm::Poisson;
    else if (algorithm == "macaulay")
        flags.algorithm = eliminant::ResultantAlgorithm::Macaulay;
    else if (algorithm == "interpolate")
        flags.algorithm = eliminant::ResultantAlgorithm::Interpolate;

    const bool json = format == "json";
    try {
        auto script = eliminant::parse_script(text);
        auto result = eliminant::run_script(script, flags);
        std::cout << (json ? eliminant::render_json(result)
                           : eliminant::render_text(result, timing));
        return 0;
    } catch (const eliminant::Error& e) {
        const std::string code = eliminant::err_code_name(e.code());
        if (json)
            std::cout << eliminant::render_error_json(code, e.what());
        else
            std::cerr << "error [" << code << "]: " << e.what() << "\n";
        return e.code() == eliminant::ErrCode::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        if (json)
            std::cout << eliminant::render_error_json("INTERNAL", e.what());
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
