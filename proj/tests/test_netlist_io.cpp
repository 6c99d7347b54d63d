#include <doctest.h>

#include <sstream>

#include "aslsim/errors.hpp"
#include "aslsim/netlist_io.hpp"
#include "aslsim/solver.hpp"

using namespace aslsim;

namespace {
const char* kInverter = R"(# asl inverter
material fm kind=fm rho=170 lambda=5 p=0.8 beta=0.8
material ch kind=nm rho=7 lambda=500

elem inj   vdd  c1   mat=fm L=3 w=30 t=10
elem chan  c1   c2   mat=ch L=200 w=10 t=10
elem sense c2   top  mat=fm L=3 w=30 t=10
source vdd 0.1
ground top
)";
}

TEST_CASE("loads a well-formed netlist and solves it") {
    std::istringstream in(kInverter);
    const LoadedNetlist loaded = load_netlist(in, "inverter.nl");
    CHECK(loaded.netlist.node_count == 4);
    CHECK(loaded.netlist.elements.size() == 3);
    CHECK(loaded.node_ids.count("vdd") == 1);
    const Solution sol = solve(loaded.netlist);
    CHECK(sol.branches[0].charge > 1e-3);  // mA-scale drive
}

TEST_CASE("errors carry file and line context") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream in(text);
        try {
            load_netlist(in, "bad.nl");
            FAIL("expected ConfigError for: ", text);
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CAPTURE(msg);
            CHECK(msg.find(fragment) != std::string::npos);
        }
    };
    expect_error("material m kind=fm rho=170\n", "lambda");
    expect_error("material m kind=xx rho=1 lambda=1\n", "kind");
    expect_error("material m kind=nm rho=7 lambda=-3\n", "bad.nl:1");
    expect_error("frobnicate a b\n", "unknown directive");
    expect_error("material m kind=nm rho=7 lambda=500\n"
                 "elem e a b mat=m L=10 w=10 t=10 bogus=1\n",
                 "bad.nl:2");
    expect_error("material m kind=nm rho=7 lambda=500\n"
                 "elem e a b mat=m L=10 w=10 t=10\n"
                 "source a nope\n",
                 "bad.nl:3");
    expect_error("material m kind=nm rho=7 lambda=500\n"
                 "elem e a b mat=m L=10 w=10 t=10 msign=-1\n",
                 "msign");
}

TEST_CASE("a netlist without ground is rejected at load time") {
    std::istringstream in("material m kind=nm rho=7 lambda=500\n"
                          "elem e a b mat=m L=10 w=10 t=10\n"
                          "source a 0.1\n");
    CHECK_THROWS_AS(load_netlist(in, "x.nl"), ConfigError);
}

TEST_CASE("beta defaults to p for fm materials") {
    std::istringstream in("material m kind=fm rho=170 lambda=5 p=0.6\n"
                          "elem e a b mat=m L=3 w=30 t=10\n"
                          "ground b\nsource a 0.1\n");
    const LoadedNetlist loaded = load_netlist(in, "d.nl");
    CHECK(loaded.netlist.elements[0].mat.beta == 0.6);
}
