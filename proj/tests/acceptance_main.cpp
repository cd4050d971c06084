// Acceptance suite: runs every verification criterion at its published
// tolerance and exercises the CLI surface (determinism, exit codes, shipped
// models). Prints one PASS/FAIL line per criterion.
//
// usage: acceptance [path-to-blocktf] [models-dir]

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blocktf/verify.hpp"

namespace {

struct Line {
    std::string name;
    bool pass;
    std::string detail;
    double duration_s;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_status(const std::string& cmd) {
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string run_capture(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string models_dir = argc > 2 ? argv[2] : "models";

    std::vector<Line> lines;
    for (const blocktf::CheckResult& r : blocktf::run_verification(1.0))
        lines.push_back({r.name, r.pass, r.detail, r.duration_s});

    // criterion 9, file half: the shipped models on disk are byte-identical
    // to the embedded texts and print to their golden files
    {
        bool pass = true;
        std::string detail = "shipped .bdg files and golden prints byte-identical";
        for (const blocktf::ShippedModel& m : blocktf::shipped_models()) {
            std::string disk = slurp(models_dir + "/" + m.file);
            std::string golden_file = m.file.substr(0, m.file.find('.')) + ".golden";
            std::string golden = slurp(models_dir + "/golden/" + golden_file);
            if (disk != m.text) {
                pass = false;
                detail = m.file + " differs from the embedded model text";
                break;
            }
            if (golden != m.canonical) {
                pass = false;
                detail = golden_file + " differs from the canonical print";
                break;
            }
        }
        lines.push_back({"dsl-golden-files", pass, detail, 0.0});
    }

    // criterion 10: byte-identical verify --json reports and the documented
    // exit codes, through the real binary
    if (cli.empty()) {
        lines.push_back({"cli-determinism", false, "no blocktf path supplied", 0.0});
    } else {
        bool pass = true;
        std::string detail;

        int code_a = 0, code_b = 0;
        std::string report_a = run_capture(cli + " --json verify", code_a);
        std::string report_b = run_capture(cli + " --json verify", code_b);
        if (report_a.empty() || report_a != report_b) {
            pass = false;
            detail = "verify --json reports differ between runs";
        } else if (code_a != 0 || code_b != 0) {
            pass = false;
            detail = "verify --json exited nonzero";
        }

        const std::string tmp = "/tmp/blocktf_acceptance";
        if (std::system(("mkdir -p " + tmp).c_str()) != 0) {
            pass = false;
            detail = "could not create the scratch directory";
        }
        {
            std::ofstream ok(tmp + "/ok.bdg", std::ios::binary);
            ok << blocktf::shipped_models()[0].text;
            std::ofstream loop(tmp + "/loop.bdg", std::ios::binary);
            loop << "fb(tf(1;1), tf(1;1))\n";
        }
        struct Probe {
            std::string cmd;
            int want;
        };
        const std::vector<Probe> probes = {
            {cli + " reduce " + tmp + "/ok.bdg", 0},
            {cli + " reduce " + tmp + "/missing.bdg", 1},
            {cli + " reduce " + tmp + "/loop.bdg", 2},
            {cli + " verify --only feedback-convergence --tol-scale 0", 3},
        };
        if (pass) {
            for (const Probe& p : probes) {
                int got = run_status(p.cmd);
                if (got != p.want) {
                    pass = false;
                    detail = "exit code " + std::to_string(got) + " != " + std::to_string(p.want) +
                             " for: " + p.cmd;
                    break;
                }
            }
        }
        if (pass) detail = "byte-identical verify --json; exit codes 0/1/2/3 observed";
        lines.push_back({"cli-determinism", pass, detail, 0.0});
    }

    bool all = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        all = all && lines[i].pass;
        std::printf("[%2zu/%zu] %s  %-28s %6.2fs  %s\n", i + 1, lines.size(),
                    lines[i].pass ? "PASS" : "FAIL", lines[i].name.c_str(), lines[i].duration_s,
                    lines[i].detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
