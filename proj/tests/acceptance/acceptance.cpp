// One line per criterion. Exit status is nonzero when a criterion fails on
// anything other than a recorded known gap; stretch criteria never block.
#include <collapsible/criteria.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <string>

using namespace collapsible;

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    std::uint64_t seed = 1;
    std::uint64_t census_nodes = 20'000'000;
    bool verbose = false;
    std::vector<std::string> only;
    app.add_option("--seed", seed);
    app.add_option("--ball-census-nodes", census_nodes, "node budget for the 8-vertex ball census (A10)");
    app.add_option("--only", only, "criteria to run")->delimiter(',');
    app.add_flag("-v,--verbose", verbose);
    CLI11_PARSE(app, argc, argv);

    CriteriaOptions options;
    options.seed = seed;
    options.ball_census_nodes = census_nodes;
    const auto ids = only.empty() ? criteria_ids(Tier::Full) : only;
    bool blocked = false;
    for (const auto& id : ids) {
        const auto r = run_criterion(id, options);
        std::string note;
        for (const auto& c : r.checks)
            if (c.status != Status::Pass) {
                note += note.empty() ? " [" : "; ";
                note += (c.known_gap ? "known gap: " : "") + c.what + (c.detail.empty() ? "" : ": " + c.detail);
            }
        if (!note.empty())
            note += "]";
        std::printf("%-4s %-13s %s%s (%.1f s)%s\n", r.id.c_str(), to_string(r.status).c_str(), r.title.c_str(),
                    r.stretch ? " [stretch, non-blocking]" : "", r.seconds, note.c_str());
        if (verbose)
            for (const auto& c : r.checks)
                std::printf("       %-13s %s%s\n", to_string(c.status).c_str(), c.what.c_str(),
                            c.detail.empty() ? "" : (" -- " + c.detail).c_str());
        std::fflush(stdout);
        blocked = blocked || (!r.stretch && r.blocking_failure());
    }
    return blocked ? 1 : 0;
}
