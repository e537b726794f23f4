#pragma once

#include "loggw/io.hpp"

#include <optional>
#include <string>

namespace loggw {

struct JobSpec {
    std::string command;
    std::string graph, type, tau, contacts, point, skeleton;
    std::string mode;
    std::optional<Int> cycle_bound;
    std::size_t cap = 100000;
    Exec exec = Exec::Parallel;
};

// Each returns the full output document, including the schema field.
io::json cmd_basic_monoid(const JobSpec& job);
io::json cmd_enumerate_types(const JobSpec& job);
io::json cmd_tropicalize(const JobSpec& job);
io::json cmd_trop_curve(const JobSpec& job);

io::json run_job(const JobSpec& job);

// Error document and process exit code for an exception thrown by run_job.
struct JobFailure {
    io::json document;
    int exit_code;
};
JobFailure describe_failure(const std::exception& e);

}  // namespace loggw
