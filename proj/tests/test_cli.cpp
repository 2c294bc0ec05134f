// End-to-end checks of the pball executable: documented example values,
// output formats, exit codes, and byte determinism. The binary path arrives
// as argv[1]. stderr is silenced; everything asserted lives on stdout.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

int failures = 0;

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& bin, const std::string& args) {
  const std::string cmd = "'" + bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void expect(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok) ++failures;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Cell (row, col) of a CSV body; row 0 is the header.
std::string csv_cell(const std::string& csv, std::size_t row,
                     std::size_t col) {
  const std::vector<std::string> lines = split(csv, '\n');
  if (row >= lines.size()) return "";
  const std::vector<std::string> cells = split(lines[row], ',');
  return col < cells.size() ? cells[col] : "";
}

double cell_num(const std::string& csv, std::size_t row, std::size_t col) {
  const std::string c = csv_cell(csv, row, col);
  return c.empty() ? std::nan("") : std::strtod(c.c_str(), nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-pball>\n");
    return 2;
  }
  const std::string bin = argv[1];

  // eval: documented values and column layout.
  {
    const RunResult r = run(bin, "eval sinp --p 2 --x 1.0");
    expect(r.code == 0, "eval sinp exits 0");
    expect(csv_cell(r.out, 0, 0) == "p" && csv_cell(r.out, 0, 1) == "x" &&
               csv_cell(r.out, 0, 2) == "value",
           "eval sinp header is p,x,value");
    expect(std::fabs(cell_num(r.out, 1, 2) - 0.8414709848078965) < 5e-15,
           "eval sinp --x 1 matches sin(1)");
  }
  {
    const RunResult r = run(bin, "eval pip --p 2");
    expect(r.code == 0 &&
               std::fabs(cell_num(r.out, 1, 1) - 3.141592653589793) < 1e-15,
           "eval pip --p 2 prints pi");
  }
  {
    const RunResult r = run(bin, "eval sincp --p 3 --x 0");
    expect(r.code == 0 && cell_num(r.out, 1, 2) == 1.0,
           "eval sincp at 0 is exactly 1");
  }
  {
    const RunResult r = run(bin, "eval arcsinp --p 2 --x -0.5");
    expect(r.code == 0 &&
               std::fabs(cell_num(r.out, 1, 2) + 0.52359877559829887) < 1e-14,
           "eval arcsinp odd extension");
  }
  {
    const RunResult r = run(bin, "eval cosp --p 2 --x 1 --format json");
    expect(r.code == 0 && r.out.rfind("{\"command\":\"eval\"", 0) == 0,
           "eval json opens with the command field");
    expect(r.out.find("\"status\":\"info\"") != std::string::npos,
           "eval json carries info status");
  }

  // Usage and domain errors exit with 2.
  expect(run(bin, "eval sinp --p 2").code == 2, "eval without --x exits 2");
  expect(run(bin, "eval nosuch --p 2 --x 1").code == 2,
         "unknown function exits 2");
  expect(run(bin, "eval sinp --p 1 --x 1").code == 2, "p = 1 exits 2");
  expect(run(bin, "eval tanp --p 2 --x 1.5707963267948966").code == 2,
         "tan_p pole exits 2");
  expect(run(bin, "nosuchcmd").code == 2, "unknown subcommand exits 2");
  expect(run(bin, "").code == 2, "missing subcommand exits 2");
  expect(run(bin, "verify --suite nosuch --p 2").code == 2,
         "unknown suite exits 2");
  expect(run(bin, "eval sinp --p 2 --x 1 --format xml").code == 2,
         "unknown format exits 2");
  expect(run(bin, "integral --p 2 --q 0.5").code == 2, "q <= 1 exits 2");

  // integral: reference value, diagnostics, convergence.
  {
    const RunResult r = run(bin, "integral --p 2 --q 10");
    expect(r.code == 0, "integral q=10 exits 0");
    expect(csv_cell(r.out, 0, 4) == "scaled" &&
               csv_cell(r.out, 0, 8) == "converged",
           "integral header names scaled and converged");
    expect(std::fabs(cell_num(r.out, 1, 4) - 2.1380116584472733) < 1e-7,
           "integral q=10 scaled value");
    expect(cell_num(r.out, 1, 8) == 1.0, "integral q=10 converged");
  }
  {
    const RunResult r = run(bin, "integral --p 2 --q 6 --n 1 --tol 1e-6");
    expect(r.code == 0, "integral n=1 exits 0");
    expect(cell_num(r.out, 1, 3) < 0.0, "integral n=1 raw value negative");
    expect(cell_num(r.out, 1, 4) > 0.0, "integral n=1 scaled sign-corrected");
  }

  // limit-table: the gap column shrinks along the list.
  {
    const RunResult r = run(bin, "limit-table --p 2 --q-list 10,100 --tol 1e-7");
    expect(r.code == 0, "limit-table exits 0");
    expect(std::fabs(cell_num(r.out, 1, 2) - 2.1708037636748028) < 1e-12,
           "limit-table limit column");
    expect(std::fabs(cell_num(r.out, 2, 3)) < std::fabs(cell_num(r.out, 1, 3)),
           "limit-table gap shrinks from q=10 to q=100");
  }

  // expand: adding the g1 term shrinks the residual.
  {
    const RunResult r = run(bin, "expand --p 2 --order 2 --q 200 --tol 1e-8");
    expect(r.code == 0, "expand exits 0");
    expect(std::fabs(cell_num(r.out, 2, 4)) < std::fabs(cell_num(r.out, 1, 4)),
           "expand residual m=1 below m=0");
  }

  // verify: pass column, exit code, json status.
  {
    const RunResult r = run(bin, "verify --suite jordan --p 2 --samples 500");
    expect(r.code == 0, "verify jordan exits 0");
    expect(csv_cell(r.out, 1, 0) == "jordan" && cell_num(r.out, 1, 4) == 1.0,
           "verify jordan row passes");
  }
  {
    const RunResult r =
        run(bin, "--format json verify --suite pythagorean --p 1.5 "
                 "--samples 300");
    expect(r.code == 0 &&
               r.out.find("\"status\":\"pass\"") != std::string::npos,
           "verify pythagorean json status pass");
  }

  // phi-limit: the sequence settles on the derivative-form candidate.
  {
    const RunResult r =
        run(bin, "phi-limit --p 2 --n 1 --q-list 10,100 --format json");
    expect(r.code == 0 &&
               r.out.find("\"matches\":\"derivative\"") != std::string::npos,
           "phi-limit n=1 matches the derivative candidate");
  }

  // Byte determinism across repeated invocations.
  {
    const RunResult a = run(bin, "integral --p 2 --q 50");
    const RunResult b = run(bin, "integral --p 2 --q 50");
    expect(a.code == 0 && a.out == b.out, "integral output is byte-stable");
    const RunResult c = run(bin, "verify --suite symmetry --p 1.5 --samples 300");
    const RunResult d = run(bin, "verify --suite symmetry --p 1.5 --samples 300");
    expect(c.code == 0 && c.out == d.out, "verify output is byte-stable");
  }

  // Help screens list the subcommands and diagnostics columns.
  {
    const RunResult r = run(bin, "--help");
    expect(r.code == 0 && r.out.find("integral") != std::string::npos &&
               r.out.find("verify") != std::string::npos,
           "--help lists subcommands");
  }

  std::printf("test_cli: %d failure(s)\n", failures);
  return failures;
}
