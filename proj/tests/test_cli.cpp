#include "doctest.h"
#include "commands.hpp"
#include "mink/bounds.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace mink::cli;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("mink_test_" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cmd_bound payloads") {
    BoundArgs args;
    args.kind = "endofield";
    args.g = 3;
    auto out = cmd_bound(args);
    CHECK(out.exit_code == kExitPass);
    CHECK(out.payload["bound"] == "2^6*3^3*7");

    args.p = 2;
    CHECK(cmd_bound(args).payload["exponent"] == 6);

    BoundArgs sil;
    sil.kind = "silverberg";
    sil.g = 2;
    CHECK(cmd_bound(sil).payload["bound"] == "2^8*3^2*5");

    BoundArgs sp;
    sp.kind = "sp";
    sp.g = 1;
    CHECK(cmd_bound(sp).payload["bound"] == "2^2*3");
    sp.p = 2;
    CHECK(cmd_bound(sp).payload["exponent"] == 2);
    sp.p = 3;
    CHECK(cmd_bound(sp).payload["exponent"] == 1);

    BoundArgs mink_args;
    mink_args.kind = "minkowski";
    mink_args.n = 2;
    mink_args.field = "Q(i)";
    auto mout = cmd_bound(mink_args);
    CHECK(mout.payload["bound"] == "2^5*3");
    CHECK(mout.payload["field"] == "Q(i)");
    mink_args.p = 2;
    CHECK(cmd_bound(mink_args).payload["exponent"] == 5);
}

TEST_CASE("cmd_bound validation") {
    BoundArgs args;
    args.kind = "bogus";
    args.g = 1;
    CHECK_THROWS_AS((void)cmd_bound(args), std::invalid_argument);
    BoundArgs no_g;
    no_g.kind = "silverberg";
    CHECK_THROWS_AS((void)cmd_bound(no_g), std::invalid_argument);
    BoundArgs no_n;
    no_n.kind = "minkowski";
    CHECK_THROWS_AS((void)cmd_bound(no_n), std::invalid_argument);
    BoundArgs other;
    other.kind = "minkowski";
    other.n = 1;
    other.field = "cyclo:16:1,7";
    other.p = 2;
    CHECK_THROWS_AS((void)cmd_bound(other), mink::NoClosedFormError);
}

TEST_CASE("cmd_empirical single prime") {
    EmpiricalArgs args;
    args.rank = 1;
    args.field = "Q(i)";
    args.p = 2;
    args.budget = 100;
    args.window = 20;
    const auto out = cmd_empirical(args);
    CHECK(out.exit_code == kExitPass);
    CHECK(out.payload["exponent"] == 2);
    CHECK(out.payload["stable"] == true);
    CHECK(out.payload["primes_used"] == 99);
    CHECK(out.payload["field"] == "Q(i)");
}

TEST_CASE("cmd_empirical unstable exit code") {
    EmpiricalArgs args;
    args.p = 2;
    args.budget = 10;
    args.window = 10;
    const auto out = cmd_empirical(args);
    CHECK(out.exit_code == kExitUnstable);
    CHECK(out.payload["stable"] == false);
}

TEST_CASE("cmd_empirical argument exclusivity") {
    EmpiricalArgs both;
    both.p = 2;
    both.p_max = 7;
    CHECK_THROWS_AS((void)cmd_empirical(both), std::invalid_argument);
    EmpiricalArgs neither;
    CHECK_THROWS_AS((void)cmd_empirical(neither), std::invalid_argument);
}

TEST_CASE("cmd_empirical bound assembly") {
    EmpiricalArgs args;
    args.group = "sp";
    args.rank = 1;
    args.p_max = 7;
    args.budget = 200;
    args.window = 20;
    const auto out = cmd_empirical(args);
    CHECK(out.exit_code == kExitPass);
    CHECK(out.payload["bound"] == "2^3*3");
    CHECK(out.payload["all_stable"] == true);
    CHECK(out.payload["components"].size() == 4);
    CHECK(out.payload["components"][0]["p"] == 2);
    CHECK(out.payload["components"][0]["exponent"] == 3);
}

TEST_CASE("cmd_empirical cache") {
    TempFile cache("cache.json");
    EmpiricalArgs args;
    args.rank = 1;
    args.field = "Q(i)";
    args.p = 2;
    args.budget = 100;
    args.window = 20;
    args.cache_path = cache.path;

    const auto first = cmd_empirical(args);
    CHECK(first.payload["exponent"] == 2);

    std::ifstream in(cache.path);
    REQUIRE(in.good());
    const json doc = json::parse(in);
    CHECK(doc.is_object());
    CHECK(doc.contains("group=gl;rank=1;field=Q(i);p=2;budget=100;window=20"));

    const auto second = cmd_empirical(args);
    CHECK(second.payload == first.payload);
    CHECK(second.exit_code == kExitPass);
}

TEST_CASE("cmd_empirical corrupt cache is ignored") {
    TempFile cache("corrupt.json");
    {
        std::ofstream out(cache.path);
        out << "this is not json {{{";
    }
    EmpiricalArgs args;
    args.p = 3;
    args.budget = 50;
    args.window = 10;
    args.cache_path = cache.path;
    const auto out = cmd_empirical(args);
    CHECK(out.payload["exponent"] == 0);
    // The rewritten cache is valid again.
    std::ifstream in(cache.path);
    CHECK(json::parse(in).is_object());
}

TEST_CASE("cmd_verify") {
    VerifyArgs table;
    table.claim = "table";
    const auto out = cmd_verify(table);
    CHECK(out.exit_code == kExitPass);
    CHECK(out.payload["passed"] == true);
    CHECK(out.payload["rows"].size() == 3);
    CHECK(out.payload["rows"][2]["silverberg"] == "2^11*3^4*5*7");

    VerifyArgs p2;
    p2.claim = "imprimitive-p2";
    p2.g_max = 20;
    const auto out2 = cmd_verify(p2);
    CHECK(out2.exit_code == kExitPass);
    CHECK(out2.payload["equality_cases"] == json::array({"n=2 d=2"}));

    VerifyArgs bogus;
    bogus.claim = "bogus";
    CHECK_THROWS_AS((void)cmd_verify(bogus), std::invalid_argument);
}

TEST_CASE("cmd_group order") {
    GroupArgs args;
    args.action = "order";
    args.gens = {"0,-1;1,0"};
    const auto out = cmd_group(args);
    CHECK(out.exit_code == kExitPass);
    CHECK(out.payload["order"] == "2^2");
    CHECK(out.payload["cap_exceeded"] == false);

    GroupArgs capped;
    capped.action = "order";
    capped.gens = {"2"};
    capped.cap = 100;
    const auto cout_ = cmd_group(capped);
    CHECK(cout_.exit_code == kExitPass);
    CHECK(cout_.payload["order"].is_null());
    CHECK(cout_.payload["cap_exceeded"] == true);

    GroupArgs via_witness;
    via_witness.action = "order";
    via_witness.witness = "cp-wr-sk:3:2";
    CHECK(cmd_group(via_witness).payload["order"] == "2*3^2");
}

TEST_CASE("cmd_group witness") {
    GroupArgs args;
    args.action = "witness";
    args.witness = "cp-wr-sk:3:2";
    const auto out = cmd_group(args);
    CHECK(out.payload["dimension"] == 4);
    CHECK(out.payload["generators"].size() == 2);
    CHECK(out.payload["order_formula"] == "2*3^2");
    CHECK(out.payload["sylow_exponent"] == 2);
    CHECK(out.payload["projective_exponent"] == 1);

    GroupArgs c4;
    c4.action = "witness";
    c4.witness = "c4-wr-sk:2";
    const auto out2 = cmd_group(c4);
    CHECK(out2.payload["dimension"] == 4);
    CHECK(out2.payload["symplectic"] == true);
    CHECK(out2.payload["sylow_exponent"] == 5);

    GroupArgs bad;
    bad.action = "witness";
    bad.witness = "cp-wr-sk:x:2";
    CHECK_THROWS_AS((void)cmd_group(bad), std::invalid_argument);
    bad.witness = "foo:1";
    CHECK_THROWS_AS((void)cmd_group(bad), std::invalid_argument);

    GroupArgs conflict;
    conflict.action = "order";
    conflict.gens = {"2"};
    conflict.witness = "c4-wr-sk:1";
    CHECK_THROWS_AS((void)cmd_group(conflict), std::invalid_argument);
    GroupArgs none;
    none.action = "order";
    CHECK_THROWS_AS((void)cmd_group(none), std::invalid_argument);
    GroupArgs bad_action;
    bad_action.action = "bogus";
    bad_action.gens = {"2"};
    CHECK_THROWS_AS((void)cmd_group(bad_action), std::invalid_argument);
}

TEST_CASE("render formats") {
    BoundArgs args;
    args.kind = "endofield";
    args.g = 3;
    const auto out = cmd_bound(args);

    CHECK(render(out, "text") == "2^6*3^3*7\n");
    const json round = json::parse(render(out, "json"));
    CHECK(round == out.payload);
    const std::string csv = render(out, "csv");
    CHECK(csv.find("kind,g,n,field,p,result") != std::string::npos);
    CHECK(csv.find("endofield,3,,,,") != std::string::npos);
    CHECK(render(out, "markdown").find("| kind |") != std::string::npos);
    CHECK_THROWS_AS((void)render(out, "yaml"), std::invalid_argument);

    // Determinism in the machine formats.
    const auto again = cmd_bound(args);
    CHECK(render(again, "json") == render(out, "json"));
    CHECK(render(again, "csv") == render(out, "csv"));

    VerifyArgs table;
    table.claim = "table";
    const auto vt = cmd_verify(table);
    CHECK(render(vt, "text").find("claim table: PASS") != std::string::npos);
    CHECK(render(vt, "csv").find("table,6,0,0,0,true") != std::string::npos);

    EmpiricalArgs emp;
    emp.rank = 1;
    emp.field = "Q(i)";
    emp.p = 2;
    emp.budget = 100;
    emp.window = 20;
    const auto eo = cmd_empirical(emp);
    CHECK(render(eo, "text").find("exponent 2") != std::string::npos);
    CHECK(render(eo, "csv").find("gl,1,Q(i),2,2,99,true,20") != std::string::npos);
}
