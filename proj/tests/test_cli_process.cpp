#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

// Exit-code contract of the installed binary: 0 success, 2 usage, 1 runtime.

namespace {

int run(const std::string& arguments) {
    const std::string command =
        std::string("\"") + SEQBELL_CLI_PATH + "\" " + arguments + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("CLI exit codes") {
    const auto dir = std::filesystem::temp_directory_path() / "seqbell_cli_exit";
    std::filesystem::remove_all(dir);

    CHECK(run("--pairs 8 --runs 4 --out \"" + dir.string() + "\"") == 0);
    CHECK(std::filesystem::exists(dir / "summary.json"));

    CHECK(run("--pairs 401") == 2);            // balanced schedule needs M % 4 == 0
    CHECK(run("--no-such-flag") == 2);
    CHECK(run("--runs 0") == 2);
    CHECK(run("--help") == 0);

    // Uniform tiny schedules leave correlators unsampled: a runtime failure.
    CHECK(run("--pairs 4 --runs 20 --schedule uniform --out \"" + dir.string() + "\"") == 1);
    // Unwritable output directory.
    CHECK(run("--pairs 8 --runs 4 --out /dev/null/out") == 1);

    std::filesystem::remove_all(dir);
}
