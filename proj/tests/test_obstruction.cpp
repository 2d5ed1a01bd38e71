#include <gtest/gtest.h>

#include <fstream>

#include "ribbon/fixtures.hpp"
#include "ribbon/obstruction.hpp"

using namespace ribbon;

namespace {

const std::vector<RSet>& sets()
{
    static const std::vector<RSet> s = compute_rsets(4);
    return s;
}

KnotRecord record(const std::string& name, Coeff det, const char* poly, int genus, std::optional<int> crosscap = {})
{
    KnotRecord k;
    k.name = name;
    k.determinant = det;
    k.alexander = canonicalize(parse_poly(poly));
    k.genus = genus;
    k.crosscap = crosscap;
    return k;
}

bool binds(const LowerBound& lb, Rule r) { return std::find(lb.binding.begin(), lb.binding.end(), r) != lb.binding.end(); }

std::vector<KnotRecord> all_knots()
{
    auto a = load_knots(default_data_dir() / "knots_12n.csv");
    auto b = load_knots(default_data_dir() / "knots_12a.csv");
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST(ObstructionLower, Examples)
{
    auto lb = lower_bound(record("12n_4", 81, "1-7t+19t^2-27t^3+19t^4-7t^5+t^6", 3), sets());
    EXPECT_EQ(lb.value, 4);
    EXPECT_TRUE(binds(lb, Rule::rset_exclusion));

    lb = lower_bound(record("12n_23", 9, "2-5t+2t^2", 2), sets());
    EXPECT_EQ(lb.value, 3);
    EXPECT_TRUE(binds(lb, Rule::special));

    lb = lower_bound(record("12a_183", 121, "6-30t+49t^2-30t^3+6t^4", 2), sets());
    EXPECT_EQ(lb.value, 5);
    EXPECT_TRUE(binds(lb, Rule::rset_exclusion));
    ASSERT_FALSE(lb.fired.empty());
}

TEST(ObstructionLower, Crosscap)
{
    const auto lb = lower_bound(record("K", 49, "4-12t+17t^2-12t^3+4t^4", 2, 3), sets());
    EXPECT_TRUE(std::any_of(lb.fired.begin(), lb.fired.end(), [](const Justification& j) {
        return j.rule == Rule::crosscap && j.value == 3;
    }));
    const auto none = lower_bound(record("K", 49, "4-12t+17t^2-12t^3+4t^4", 2, 2), sets());
    EXPECT_FALSE(std::any_of(none.fired.begin(), none.fired.end(), [](const Justification& j) { return j.rule == Rule::crosscap; }));
}

TEST(ObstructionLower, TrivialPolynomial)
{
    auto lb = lower_bound(record("U", 1, "1", 0), sets());
    EXPECT_EQ(lb.value, 0);
    EXPECT_TRUE(lb.binding.empty());
    KnotRecord k = record("K", 1, "1", 1);
    k.nontrivial = true;
    lb = lower_bound(k, sets());
    EXPECT_EQ(lb.value, 2);
    EXPECT_TRUE(binds(lb, Rule::baseline));
}

// More information never lowers the bound.
TEST(ObstructionLower, Monotone)
{
    for (const auto& k : all_knots()) {
        int prev = 0;
        for (std::size_t n = 0; n <= sets().size(); ++n) {
            const std::vector<RSet> prefix(sets().begin(), sets().begin() + static_cast<std::ptrdiff_t>(n));
            const int v = lower_bound(k, prefix).value;
            EXPECT_GE(v, prev) << k.name;
            prev = v;
        }
        KnotRecord more = k;
        more.genus += 1;
        more.crosscap = 7;
        EXPECT_GE(lower_bound(more, sets()).value, lower_bound(k, sets()).value) << k.name;
        EXPECT_GE(lower_bound(k, sets()).value, k.genus);
    }
}

TEST(ObstructionUpper, SymmetricUnion)
{
    EXPECT_EQ(symmetric_union_bound(6, 2), 4);
    EXPECT_EQ(symmetric_union_bound(7, 0), 7);
    EXPECT_EQ(symmetric_union_bound(5, 5), 0);
    EXPECT_THROW(symmetric_union_bound(3, 4), DataError);
    EXPECT_THROW(symmetric_union_bound(-1, 0), DataError);
}

TEST(ObstructionRecords, Validation)
{
    EXPECT_NO_THROW(validate_record(record("12n_288", 49, "4-12t+17t^2-12t^3+4t^4", 2)));
    EXPECT_THROW(validate_record(record("K", 50, "2-5t+2t^2", 1)), DataError);
    EXPECT_THROW(validate_record(record("K", 3, "1-t+t^2", 1)), DataError);  // not a square determinant
    EXPECT_THROW(validate_record(record("K", 3, "1+t", 1)), DataError);
    KnotRecord k = record("K", 9, "2-5t+2t^2", 1);
    k.genus4 = 2;
    EXPECT_THROW(validate_record(k), DataError);
}

TEST(ObstructionRecords, LoadKnots)
{
    const auto dir = std::filesystem::temp_directory_path() / "ribbon_obstruction_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "ok.csv");
        f << "name,det,alexander,genus,crosscap,genus4,upper,note\n"
          << "# comment line\n"
          << "12n_288, 49, 4-12t+17t^2-12t^3+4t^4, 2, , , 4:symmetric-union,x\n"
          << "12a_1202, 169, 9-42t+67t^2-42t^3+9t^4, 2, 5, , 6:symmetric-union;7:other,y\n";
    }
    const auto ks = load_knots(dir / "ok.csv");
    ASSERT_EQ(ks.size(), 2u);
    EXPECT_EQ(ks[0].uppers.size(), 1u);
    EXPECT_EQ(ks[0].uppers[0].value, 4);
    EXPECT_EQ(ks[0].extra.at("note"), "x");
    EXPECT_EQ(ks[1].crosscap, 5);
    EXPECT_EQ(ks[1].uppers.size(), 2u);

    {
        std::ofstream f(dir / "bad.csv");
        f << "name,det,alexander,genus,crosscap,genus4,upper\n"
          << "K,50,2-5t+2t^2,1,,,\n";
    }
    try {
        load_knots(dir / "bad.csv");
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.csv:2"), std::string::npos) << e.what();
    }
    {
        std::ofstream f(dir / "garbled.csv");
        f << "name,det,alexander,genus,crosscap,genus4,upper\n"
          << "K,9,2-5t+*2t^2,1,,,\n";
    }
    EXPECT_THROW(load_knots(dir / "garbled.csv"), DataError);
    std::filesystem::remove_all(dir);
}

TEST(ObstructionTabulate, Reports)
{
    KnotRecord open = record("K9", 9, "2-5t+2t^2", 1);
    KnotRecord closed = record("K10", 49, "4-12t+17t^2-12t^3+4t^4", 2);
    closed.uppers = {{5, "a"}, {4, "symmetric-union"}};
    const auto reps = tabulate({open, closed}, sets());
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_EQ(reps[0].name, "K9");  // natural order: 9 before 10
    EXPECT_FALSE(reps[0].upper);
    EXPECT_FALSE(reps[0].resolved());
    EXPECT_EQ(reps[1].upper, 4);
    EXPECT_EQ(reps[1].upper_source, "symmetric-union");
    EXPECT_TRUE(reps[1].resolved());
}

// The tables' own interval minimum never exceeds what the sets prove.
TEST(ObstructionTables, EngineLowerAtLeastTableMinimum)
{
    for (const auto& k : all_knots()) {
        const std::string& range = k.extra.at("table_r");
        const int table_lo = std::stoi(range.substr(0, range.find("..")));
        EXPECT_GE(lower_bound(k, sets()).value, table_lo) << k.name;
    }
}

// Every tabulated row must have lower <= upper.
TEST(ObstructionTables, LowerWithinUpper)
{
    for (const auto& rep : tabulate(all_knots(), sets())) {
        EXPECT_TRUE(rep.consistent()) << rep.name << ": lower " << rep.lower << " exceeds upper " << *rep.upper << " ("
                                      << rep.upper_source << ")";
    }
}
