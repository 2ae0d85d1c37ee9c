// End-to-end checks of the command line binary; the path to the built binary
// is argv[1]. Each case runs the tool through popen and inspects stdout plus
// the exit status.
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;

struct RunResult {
    std::string out;
    int status = -1;
};

RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

RunResult run(const std::string& binary, const std::string& args) {
    return run_raw(binary + " " + args);
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::fprintf(stderr, "FAIL: %s\n", what.c_str());
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
        return 2;
    }
    const std::string bin = argv[1];

    RunResult r = run(bin, "marks --p 2 --n 3 --elem t:[0,1,0,0]");
    expect(r.status == 0, "marks exits 0");
    expect(r.out == "[4,4,0,0]\n", "marks of the level-1 orbit, got: " + r.out);

    r = run(bin, "marks --p 2 --n 2 --elem z:[0,1,0]");
    expect(r.status == 0 && r.out == "[0,4,0]\n", "marks of z_1, got: " + r.out);

    r = run(bin, "marks --p 2 --n 2 --elem t:[1,2");
    expect(r.status == 2, "malformed element exits 2");

    r = run(bin, "marks --p 2 --n 1 --elem marks:[1,0]");
    expect(r.status == 3, "marks outside the image exit 3");

    r = run(bin, "mahowald --p 2 --n 1 --elem 2");
    expect(r.status == 0, "mahowald exits 0");
    expect(contains(r.out, "degree: 1"), "degree line present, got: " + r.out);
    expect(contains(r.out, "η"), "invariant line present, got: " + r.out);

    r = run(bin, "mahowald --p 2 --n 2 --elem t:[0,0]");
    expect(r.status == 3, "zero element exits 3");

    r = run(bin, "mahowald --json --p 2 --n 2 --elem t:[1,2]");
    expect(r.status == 0, "mahowald --json exits 0");
    {
        auto doc = nlohmann::json::parse(r.out, nullptr, false);
        expect(!doc.is_discarded(), "mahowald --json parses");
        if (!doc.is_discarded()) {
            expect(doc.at("degree") == 2, "json degree");
            expect(doc.at("display") == "η²", "json display");
            expect(doc.at("j").at("family") == "eta_squared", "json family");
        }
    }

    r = run(bin, "mk --p 2 --n 1 --k 2");
    expect(r.status == 0 && r.out == "[1,-1]\n", "mk oracle basis, got: " + r.out);
    RunResult closed = run(bin, "mk --p 2 --n 1 --k 2 --mode closed");
    expect(closed.status == 0 && closed.out == r.out, "closed mode agrees");
    r = run(bin, "mk --p 2 --n 1 --k 2 --mode bogus");
    expect(r.status == 2, "unknown mode exits 2");

    r = run(bin, "verify --suite examples");
    expect(r.status == 0, "verify examples exits 0");
    expect(contains(r.out, "PASS"), "verify examples reports PASS");
    expect(!contains(r.out, "FAIL"), "verify examples has no FAIL");

    r = run(bin, "verify --suite bogus");
    expect(r.status == 2, "unknown suite exits 2");

    r = run(bin, "verify --suite burnside --max-n 1");
    expect(r.status == 0, "verify burnside --max-n 1 exits 0");

    r = run(bin, "verify --suite quotients --max-n 2 --max-k 12 --json");
    expect(r.status == 0, "verify --json exits 0");
    {
        auto doc = nlohmann::json::parse(r.out, nullptr, false);
        expect(!doc.is_discarded() && doc.at("pass") == true, "verify --json pass field");
    }

    r = run_raw("echo 't:[2,4]' | " + bin + " mahowald --p 2 --n 2 --elem -");
    expect(r.status == 0 && contains(r.out, "2ν"), "stdin element, got: " + r.out);

    for (char ch : r.out) expect(ch != '\x1b', "no escape sequences in output");

    if (g_failures == 0) std::printf("cli: all checks passed\n");
    return g_failures == 0 ? 0 : 1;
}
