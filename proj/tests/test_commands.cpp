#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "cli_commands.hpp"

TEST_CASE("every library operation is reachable from exactly one subcommand") {
    std::set<std::string> ops(tcbcli::kAllOperations,
                              tcbcli::kAllOperations + tcbcli::kOperationCount);
    REQUIRE(ops.size() == tcbcli::kOperationCount);  // no duplicates in the list

    std::map<std::string, int> reached;
    std::set<std::string> paths;
    for (const auto& row : tcbcli::kCommands) {
        CHECK(paths.insert(row.path).second);  // unique subcommand paths
        CHECK(ops.count(row.op) == 1);         // maps to a known operation
        ++reached[row.op];
    }
    for (const std::string& op : ops) {
        INFO("operation ", op);
        CHECK(reached[op] == 1);
    }
    CHECK(tcbcli::kCommandCount == tcbcli::kOperationCount);
}
