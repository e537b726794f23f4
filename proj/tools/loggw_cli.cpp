#include "loggw/commands.hpp"
#include "loggw/errors.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    loggw::JobSpec job;
    std::string out_path;
    std::string cycle_bound;
    int threads = 0;

    CLI::App app{"loggw: ghost-level log curve computations"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--threads", threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
        sub->add_option("--out", out_path, "write the output document here instead of stdout");
    };

    auto* bm = app.add_subcommand("basic-monoid", "basic monoid of a type");
    bm->add_option("--graph", job.graph)->required();
    bm->add_option("--type", job.type)->required();
    common(bm);

    auto* et = app.add_subcommand("enumerate-types", "enumerate balanced types");
    et->add_option("--graph", job.graph)->required();
    et->add_option("--tau", job.tau);
    et->add_option("--contacts", job.contacts);
    et->add_option("--mode", job.mode, "almost-generated | quasi-generated");
    et->add_option("--cycle-bound", cycle_bound);
    et->add_option("--cap", job.cap);
    common(et);

    auto* tr = app.add_subcommand("tropicalize", "cone complex of a skeleton");
    tr->add_option("--skeleton", job.skeleton)->required();
    common(tr);

    auto* tc = app.add_subcommand("trop-curve", "tropical curve export");
    tc->add_option("--graph", job.graph)->required();
    tc->add_option("--type", job.type)->required();
    tc->add_option("--point", job.point)->required();
    tc->add_option("--mode", job.mode, "sections | group-sections");
    common(tc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    job.command = app.get_subcommands().front()->get_name();
    if (threads > 0) omp_set_num_threads(threads);
    job.exec = threads == 1 ? loggw::Exec::Serial : loggw::Exec::Parallel;

    loggw::io::json doc;
    int code = 0;
    try {
        if (!cycle_bound.empty()) job.cycle_bound = loggw::io::parse_int(loggw::io::json(cycle_bound), "--cycle-bound");
        doc = loggw::run_job(job);
    } catch (const std::exception& e) {
        auto f = loggw::describe_failure(e);
        doc = f.document;
        code = f.exit_code;
    }
    std::string text = loggw::io::dump(doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return code;
}
