#include <doctest.h>

#include <homforge/json_io.hpp>
#include <homforge/model_search.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "fixtures.hpp"

using homforge::io::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a full shell command and captures stdout. Inputs go through temp
// files because the binary reads either stdin or a named file.
RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    RunResult r;
    r.out = std::move(out);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run(const std::string& args) {
    return run_raw(std::string(HOMFORGE_BIN) + " " + args);
}

std::string write_input(const std::string& name, const std::string& text) {
    std::string path = "/tmp/homforge_cli_" + std::to_string(getpid()) + "_" + name + ".json";
    std::ofstream out(path);
    out << text;
    REQUIRE(out.good());
    return path;
}

std::string structure_file(const std::string& name, const homforge::FiniteHomStructure& h) {
    return write_input(name, homforge::io::to_json(h).dump());
}

}  // namespace

TEST_CASE("cli check: verdict, properties, and exit code") {
    auto ok = run("check " + structure_file("z2", fixtures::z2_add()) + " 2>/dev/null");
    CHECK(ok.exit_code == 0);
    json rep = json::parse(ok.out);
    CHECK(rep.at("hom_associative") == true);
    CHECK(rep.at("alpha").at("surjective") == true);
    CHECK(rep.at("alpha").at("bijective") == true);
    CHECK(rep.at("degeneracy").at("strong").is_null());
    CHECK_FALSE(rep.contains("twist"));

    homforge::FiniteHomStructure bad{2, {0, 1, 1, 0}, {0, 0}};
    auto fail = run("check " + structure_file("bad", bad) + " 2>/dev/null");
    CHECK(fail.exit_code == 1);
    json frep = json::parse(fail.out);
    CHECK(frep.at("hom_associative") == false);
    CHECK(frep.at("hom_violation") == json::array({0, 0, 1}));
}

TEST_CASE("cli check --twist reports the untwisted table") {
    auto r = run("check --twist " + structure_file("swap", fixtures::z2_add_swap()) +
                 " 2>/dev/null");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("twist") == json::array({json::array({1, 0}), json::array({0, 1})}));

    homforge::FiniteHomStructure miss{2, {0, 0, 0, 1}, {0, 0}};
    auto none = run("check --twist " + structure_file("miss", miss) + " 2>/dev/null");
    json nrep = json::parse(none.out);
    CHECK(nrep.at("twist").is_null());
}

TEST_CASE("cli rejects malformed input on exit code 2") {
    auto broken = run("check " + write_input("broken", "{oops") + " 2>&1 1>/dev/null");
    CHECK(broken.exit_code == 2);
    CHECK(json::parse(broken.out).contains("error"));

    auto range = run("check " +
                     write_input("range", R"({"size":2,"table":[[0,3],[1,0]],"alpha":[0,1]})") +
                     " 2>&1 1>/dev/null");
    CHECK(range.exit_code == 2);
    std::string msg = json::parse(range.out).at("error");
    CHECK(msg.find("index out of range") != std::string::npos);

    CHECK(run("check /no/such/file 2>/dev/null").exit_code == 2);
    CHECK(run("2>/dev/null").exit_code == 2);            // missing subcommand
    CHECK(run("search --size 2 --alpha sideways 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli search --count") {
    auto r = run("search --size 2 --count 2>/dev/null");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("count") == 22);
    CHECK(rep.at("constraints").at("size") == 2);

    json surj = json::parse(run("search --size 2 --alpha surjective --count 2>/dev/null").out);
    CHECK(surj.at("count") == 14);
    json canon = json::parse(
        run("search --size 3 --alpha identity --count 2>/dev/null").out);
    CHECK(canon.at("count") == 113);

    CHECK(run("search --size 9 --count 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli search stream round-trips through the parser") {
    auto r = run("search --size 2 2>/dev/null");
    CHECK(r.exit_code == 0);
    std::vector<homforge::FiniteHomStructure> parsed;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);)
        parsed.push_back(homforge::io::structure_from_json(json::parse(line)));

    homforge::search::SearchConstraints c;
    c.size = 2;
    CHECK(parsed == homforge::search::enumerate_all(c));
}

TEST_CASE("cli search --hunt") {
    auto r = run("search --size 2 --twist non_twist --hunt 2>/dev/null");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("alpha") == json::array({0, 0}));
    CHECK(rep.at("table") == json::array({json::array({0, 0}), json::array({0, 1})}));

    auto miss = run(
        "search --size 2 --alpha surjective --twist non_twist --hunt 2>/dev/null");
    CHECK(miss.exit_code == 0);
    CHECK(json::parse(miss.out).is_null());

    auto expected = run(
        "search --size 2 --alpha surjective --twist non_twist --hunt --expect 2>/dev/null");
    CHECK(expected.exit_code == 1);
}

TEST_CASE("cli verify") {
    auto p1 = run("verify --prop 1 --max-size 2 2>/dev/null");
    CHECK(p1.exit_code == 0);
    json rep = json::parse(p1.out);
    CHECK(rep.at("proposition") == "1");
    CHECK(rep.at("pass") == true);
    CHECK(rep.at("sizes").at("2").at("structures") == 14);
    CHECK(rep.at("violations") == json::array());

    auto nat = run("verify --prop nat --bound 500 2>/dev/null");
    CHECK(nat.exit_code == 0);
    json nrep = json::parse(nat.out);
    CHECK(nrep.at("pass") == true);
    CHECK(nrep.at("hom_associative") == true);
    CHECK(nrep.at("fiber_of_zero_empty") == true);

    CHECK(run("verify --prop nat --bound 1 2>/dev/null").exit_code == 2);
    CHECK(run("verify --prop 7 --max-size 2 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli deform check") {
    auto d = fixtures::trivial_deformation(fixtures::f2_swap_twist(), 2);
    auto ok = run("deform check " + write_input("triv", homforge::io::to_json(d).dump()) +
                  " 2>/dev/null");
    CHECK(ok.exit_code == 0);
    json rep = json::parse(ok.out);
    CHECK(rep.at("pass") == true);
    CHECK(rep.at("defects").size() == 3);

    auto bad = fixtures::trivial_deformation(fixtures::f2_group_algebra(), 1);
    bad.mu_t.coeffs[1].at(0, 0, 0) = 1;
    auto fail = run("deform check " + write_input("corrupt", homforge::io::to_json(bad).dump()) +
                    " 2>/dev/null");
    CHECK(fail.exit_code == 1);
    CHECK(json::parse(fail.out).at("pass") == false);
}

TEST_CASE("cli deform untwist and twist round trip") {
    auto d = fixtures::trivial_deformation(fixtures::f2_swap_twist(), 2);
    auto untwisted = run("deform untwist " +
                         write_input("untw", homforge::io::to_json(d).dump()) + " 2>/dev/null");
    CHECK(untwisted.exit_code == 0);
    json nu = json::parse(untwisted.out);
    CHECK(nu.at("associative") == true);
    auto expect = homforge::deform::constant_series(fixtures::coordinatewise(2), 2);
    CHECK(nu.at("star") == homforge::io::star_series_to_json(expect).at("star"));

    // Feed the star series back through twist with the same alpha series.
    json twist_input = nu;
    twist_input.erase("associative");
    twist_input["alpha"] = homforge::io::linear_series_to_json(d.alpha_t).at("alpha");
    auto twisted = run("deform twist " + write_input("tw", twist_input.dump()) + " 2>/dev/null");
    CHECK(twisted.exit_code == 0);
    auto back = homforge::io::deformation_from_json(json::parse(twisted.out));
    CHECK(back.mu_t == d.mu_t);
    CHECK(back.alpha_t == d.alpha_t);

    // Untwisting a corrupted deformation is refused.
    auto bad = d;
    bad.mu_t.coeffs[1].at(0, 0, 0) = 1;
    auto refused = run("deform untwist " +
                       write_input("refuse", homforge::io::to_json(bad).dump()) +
                       " 2>&1 1>/dev/null");
    CHECK(refused.exit_code == 2);
    std::string msg = json::parse(refused.out).at("error");
    CHECK(msg.find("nonzero defect") != std::string::npos);
}

TEST_CASE("cli deform invert") {
    json input = {{"p", 5},
                  {"dim", 2},
                  {"order", 1},
                  {"alpha", json::array({json::array({json::array({1, 0}), json::array({0, 1})}),
                                         json::array({json::array({1, 0}), json::array({0, 2})})})}};
    auto r = run("deform invert " + write_input("inv", input.dump()) + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    auto inv = homforge::io::linear_series_from_json(json::parse(r.out));
    auto s = homforge::io::linear_series_from_json(input);
    CHECK(homforge::deform::compose(s, inv) == homforge::deform::identity_series(5, 2, 1));

    json singular = input;
    singular["alpha"][0] = json::array({json::array({0, 0}), json::array({0, 0})});
    CHECK(run("deform invert " + write_input("sing", singular.dump()) + " 2>/dev/null")
              .exit_code == 2);
}

TEST_CASE("cli deform equiv") {
    auto d = fixtures::trivial_deformation(fixtures::coordprod_identity(3), 1);
    json phi = {{"order", 1},
                {"phi", json::array({json::array({json::array({1, 0}), json::array({0, 1})}),
                                     json::array({json::array({0, 0}), json::array({0, 0})})})}};
    json same = {{"phi", phi},
                 {"first", homforge::io::to_json(d)},
                 {"second", homforge::io::to_json(d)}};
    auto r = run("deform equiv " + write_input("eq", same.dump()) + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("equivalent") == true);

    auto d2 = d;
    d2.mu_t.coeffs[1].at(0, 0, 0) = 1;
    json differ = {{"phi", phi},
                   {"first", homforge::io::to_json(d)},
                   {"second", homforge::io::to_json(d2)}};
    auto neq = run("deform equiv " + write_input("neq", differ.dump()) + " 2>/dev/null");
    CHECK(neq.exit_code == 1);
    CHECK(json::parse(neq.out).at("equivalent") == false);

    CHECK(run("deform equiv " + write_input("missing", R"({"first": {}})") +
              " 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli deform conjugate") {
    json coord = homforge::io::to_json(fixtures::coordinatewise(2));
    json id2 = json::array({json::array({1, 0}), json::array({0, 1})});
    json swap = json::array({json::array({0, 1}), json::array({1, 0})});
    json input = {{"p", 2},     {"dim", 2},  {"phi", swap},
                  {"mul", coord}, {"alpha", id2}, {"mul_prime", coord}};
    auto r = run("deform conjugate " + write_input("conj", input.dump()) + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("alpha") == id2);  // conjugating the identity leaves it fixed
    CHECK(rep.at("mul") == coord);

    json bad = input;
    bad["mul"] = homforge::io::to_json(fixtures::f2_swap_twist().mul);
    bad["mul_prime"] = bad["mul"];
    auto refused = run("deform conjugate " + write_input("conjbad", bad.dump()) +
                       " 2>&1 1>/dev/null");
    CHECK(refused.exit_code == 2);
    std::string msg = json::parse(refused.out).at("error");
    CHECK(msg.find("not associative") != std::string::npos);
}

TEST_CASE("cli output is deterministic and thread-count independent") {
    auto a = run("search --size 3 --alpha surjective --count 2>/dev/null");
    auto b = run("search --size 3 --alpha surjective --count 2>/dev/null");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);

    std::string bin = HOMFORGE_BIN;
    auto threaded = run_raw("HOMFORGE_THREADS=2 " + bin +
                            " search --size 3 --alpha surjective --count 2>/dev/null");
    CHECK(threaded.out == a.out);
    CHECK(threaded.exit_code == 0);

    auto serial_stream = run_raw("HOMFORGE_THREADS=1 " + bin + " search --size 2 2>/dev/null");
    auto parallel_stream = run_raw("HOMFORGE_THREADS=3 " + bin + " search --size 2 2>/dev/null");
    CHECK(serial_stream.out == parallel_stream.out);

    auto v1 = run("verify --prop lemma1 --max-size 2 2>/dev/null");
    auto v2 = run("verify --prop lemma1 --max-size 2 2>/dev/null");
    CHECK(v1.out == v2.out);
}
