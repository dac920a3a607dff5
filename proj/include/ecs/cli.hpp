#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecs/partition_maya.hpp"

namespace rext::cli {

// Malformed command-line value; `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// "5,5,4,2,2"; the empty string is the empty partition.
Partition parse_partition(const std::string& s);
// "-1,2,3"
IndexSet parse_index_set(const std::string& s);
// "4,8,16"; every value must be positive.
std::vector<double> parse_alphas(const std::string& s);
// "start:stop:count" with `pi` allowed as a multiple ("2pi", "pi/2", "0.5").
std::vector<double> parse_time_grid(const std::string& s);

// The diagram selected by exactly one of --partition / --index-set.
MayaDiagram select_diagram(const std::optional<std::string>& partition, const std::optional<std::string>& index_set);

// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rext::cli
