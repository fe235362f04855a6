#include <doctest.h>

#include <string>
#include <vector>

#include "twistcalc/cli.hpp"

using twistcalc::cli::CommandResult;
using twistcalc::cli::dispatch;
using twistcalc::cli::exit_code;
using twistcalc::cli::render;
using twistcalc::cli::Status;
using json = nlohmann::json;

namespace {

CommandResult run(std::initializer_list<std::string> args) {
    return dispatch(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("cli: exit codes") {
    CHECK(exit_code(Status::ok) == 0);
    CHECK(exit_code(Status::user_error) == 1);
    CHECK(exit_code(Status::inconclusive) == 2);
}

TEST_CASE("cli: cf eval") {
    CommandResult r = run({"cf", "eval", "2,3"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["p"] == 5);
    CHECK(r.payload["q"] == 3);
    CHECK(r.payload["coeffs"] == json::array({2, 3}));
    CHECK(r.warnings.empty());

    // infinite value still reports the raw matrix entries, plus a warning
    r = run({"cf", "eval", "1,1,1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["q"] == 0);
    CHECK(r.warnings.size() == 1);
}

TEST_CASE("cli: cf expand and normalize") {
    CommandResult r = run({"cf", "expand", "5/3"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["coeffs"] == json::array({2, 3}));

    r = run({"cf", "normalize", "5/3"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["coeffs"] == json::array({1, -1, 2}));
    CHECK(r.payload["kind"] == "knot");
    CHECK(r.payload["value"]["p"] == 5);
    CHECK(r.payload["value"]["q"] == 3);
    REQUIRE(r.payload["witness"].is_array());
    REQUIRE(r.payload["witness"].size() == 1);
    CHECK(r.payload["witness"][0]["variant"] == "interior_insert");
    CHECK(r.payload["witness"][0]["site"] == 1);
    CHECK(r.payload["witness"][0]["sign"] == -1);
    CHECK(!r.payload.contains("mod4"));  // knots carry no mod-4 residue

    r = run({"cf", "normalize", "4/1"});
    CHECK(r.payload["kind"] == "link");
    CHECK(r.payload["mod4"] == 0);

    // even denominator: no normal form exists
    r = run({"cf", "normalize", "3/2"});
    CHECK(r.status == Status::user_error);
    CHECK(r.payload.contains("error"));
}

TEST_CASE("cli: twist word and is-trivial") {
    CommandResult r = run({"twist", "word", "2/1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["rational"]["p"] == 2);
    CHECK(r.payload["twist_word_text"] == "phi");
    CHECK(r.payload["braid_word_text"] == "s2^2");
    CHECK(r.payload["f2_exponent"] == 0);

    r = run({"twist", "is-trivial", "2/1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["trivial"] == false);

    r = run({"twist", "word", "3/1"});  // odd p has no twist word
    CHECK(r.status == Status::user_error);
}

TEST_CASE("cli: braid burau") {
    CommandResult r = run({"braid", "burau", "s1 s2^-1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["word"] == "s1 s2^-1");
    CHECK(r.payload.contains("burau"));
    CHECK(r.payload["is_identity"] == false);

    r = run({"braid", "burau", ""});
    CHECK(r.payload["is_identity"] == true);
    CHECK(r.payload["det_text"] == "1");

    r = run({"braid", "burau", "s3"});
    CHECK(r.status == Status::user_error);
}

TEST_CASE("cli: inv subcommands") {
    CommandResult r = run({"inv", "alexander", "3/1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["two_bridge_text"] == "t^-1 - 1 + t");
    CHECK(r.payload.contains("pattern_braid"));
    CHECK(r.warnings.empty());

    // even denominator: closed form still works, pattern braid is omitted
    r = run({"inv", "alexander", "5/2"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["two_bridge_text"] == "t^-1 - 3 + t");
    CHECK(!r.payload.contains("pattern_braid"));
    CHECK(r.warnings.size() == 1);

    r = run({"inv", "torus-link", "2"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["term_count"] == 2);
    CHECK(r.payload["value_at_ones"] == 2);

    r = run({"inv", "basic-classes", "3"});
    CHECK(r.payload["classes"] == json::array({-2, 0, 2}));
    CHECK(r.payload["pairing_check"] == true);

    r = run({"inv", "genus", "3", "7"});
    CHECK(r.payload["genus"] == 6);

    r = run({"inv", "genus", "4", "6"});  // not coprime
    CHECK(r.status == Status::user_error);
}

TEST_CASE("cli: form subcommands") {
    CommandResult r = run({"form", "show", "H"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["rank"] == 2);
    CHECK(r.payload["gram"] == json::array({json::array({0, 1}), json::array({1, 0})}));

    r = run({"form", "classify", "2/1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["kind"] == "plug");
    CHECK(r.payload["standardized_as"] == "2<1>+2<-1>");

    r = run({"form", "classify", "4/1"});
    CHECK(r.payload["kind"] == "g-cork");

    r = run({"form", "isometries", "Y_odd", "--bound", "1"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["count"] == 72);
    CHECK(r.payload["h_block_count"] == 72);

    r = run({"form", "isometries", "Y_odd", "--bound", "7"});
    CHECK(r.status == Status::user_error);

    r = run({"form", "show", "NoSuchForm"});
    CHECK(r.status == Status::user_error);
}

TEST_CASE("cli: obstruct certify statuses") {
    CommandResult r = run({"obstruct", "certify", "0", "6"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["conclusion"] == "certified");
    CHECK(r.payload["cases"].size() == 4);

    r = run({"obstruct", "certify", "2", "6"});
    CHECK(r.status == Status::inconclusive);
    CHECK(r.payload["conclusion"] == "inconclusive");

    r = run({"obstruct", "certify", "1", "6"});
    CHECK(r.status == Status::user_error);
}

TEST_CASE("cli: parse errors yield user_error with an error payload") {
    for (auto args : {std::vector<std::string>{"cf", "eval", "2,,3"},
                      std::vector<std::string>{"cf", "expand", "five/три"},
                      std::vector<std::string>{"cf", "expand", "1/0"},
                      std::vector<std::string>{"no-such-command"},
                      std::vector<std::string>{"inv", "genus", "3"}}) {
        CommandResult r = dispatch(args);
        CHECK(r.status == Status::user_error);
        CHECK(r.payload.contains("error"));
        CHECK(exit_code(r.status) == 1);
    }
}

TEST_CASE("cli: help is not an error") {
    CommandResult r = run({"--help"});
    CHECK(r.status == Status::ok);
    CHECK(!r.override_text.empty());

    r = run({"cf", "--help"});
    CHECK(r.status == Status::ok);
    CHECK(r.override_text.find("normalize") != std::string::npos);
}

TEST_CASE("cli: json format parses back and is byte-stable") {
    std::vector<std::vector<std::string>> corpus = {
        {"--format", "json", "cf", "normalize", "9/5"},
        {"--format", "json", "twist", "word", "10/3"},
        {"--format", "json", "inv", "alexander", "7/3"},
        {"--format", "json", "form", "classify", "-8/3"},
        {"--format", "json", "obstruct", "certify", "1", "9"},
    };
    for (const auto& args : corpus) {
        CommandResult first = dispatch(args);
        CommandResult second = dispatch(args);
        CHECK(first.status == Status::ok);
        CHECK(first.format == "json");
        std::string r1 = render(first);
        std::string r2 = render(second);
        CHECK(r1 == r2);
        CHECK(!r1.empty());
        CHECK(r1.back() == '\n');
        json parsed = json::parse(r1);
        CHECK(parsed == first.payload);
    }
}

TEST_CASE("cli: text rendering is flat and deterministic") {
    CommandResult r = run({"cf", "eval", "2,3"});
    std::string text = render(r);
    CHECK(text.find("p: 5") != std::string::npos);
    CHECK(text.find("q: 3") != std::string::npos);
    CHECK(text.find("coeffs: [2, 3]") != std::string::npos);
    CHECK(render(run({"cf", "eval", "2,3"})) == text);

    // error payloads render via the override text
    r = run({"cf", "normalize", "3/2"});
    std::string err = render(r);
    CHECK(err.rfind("error: ", 0) == 0);
}
