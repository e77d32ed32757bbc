#include "preproj/verify.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace preproj;

namespace {

struct Options {
    std::string type;
    int rank = 0;
    std::string nakayama;
    Scalar p = PrimeField::kDefaultCharacteristic;
    std::string format = "tsv";
    std::string suite;
    std::string word;
    std::size_t max_registry = 16;
    int ext_bound = 12;
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_algebra_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--type", o.type, "Dynkin family of the preprojective algebra")->check(CLI::IsMember({"A", "D", "E"}));
    cmd->add_option("--rank", o.rank, "Dynkin rank");
    cmd->add_option("--nakayama", o.nakayama, "self-injective Nakayama algebra N:H");
    cmd->add_option("--field-char", o.p, "characteristic of the prime field");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

std::optional<std::pair<int, int>> parse_nakayama(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw UsageError("--nakayama expects N:H");
    try {
        return std::make_pair(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
    } catch (const std::exception&) {
        throw UsageError("--nakayama expects N:H");
    }
}

std::optional<DynkinType> parse_type(const Options& o)
{
    if (o.type.empty()) {
        if (o.rank != 0)
            throw UsageError("--rank needs --type");
        return std::nullopt;
    }
    auto t = parse_dynkin_type(o.type[0], o.rank);
    if (!t)
        throw UsageError("no Dynkin diagram " + o.type + std::to_string(o.rank));
    return t;
}

void check_field(const Options& o)
{
    if (!is_prime(o.p))
        throw UsageError("--field-char must be prime");
}

AlgebraPtr select_algebra(const Options& o)
{
    check_field(o);
    auto nak = parse_nakayama(o.nakayama);
    auto type = parse_type(o);
    if (nak && type)
        throw UsageError("--type and --nakayama are exclusive");
    if (nak)
        return nakayama_algebra(nak->first, nak->second, PrimeField(o.p));
    return preprojective_algebra(type.value_or(DynkinType{DynkinFamily::A, 3}), PrimeField(o.p));
}

int cmd_classify(const Options& o)
{
    if (o.format != "tsv" && o.format != "json")
        throw UsageError("--format must be tsv or json");
    auto a = select_algebra(o);
    RegistryCaps caps;
    Setting s = make_setting(a, caps);
    auto rows = table_rows(s, classify_all(s, o.threads));
    if (o.format == "json")
        std::cout << to_json(a->name(), o.p, rows);
    else
        std::cout << to_tsv(rows);
    return 0;
}

int cmd_verify(const Options& o)
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw UsageError("unknown suite " + o.suite);
    check_field(o);
    VerifyConfig cfg;
    cfg.p = o.p;
    cfg.type = parse_type(o);
    cfg.nakayama = parse_nakayama(o.nakayama);
    cfg.ext_bound = o.ext_bound;
    cfg.max_registry = o.max_registry;
    cfg.threads = o.threads;
    auto rep = run_suite(o.suite, cfg);
    std::cout << rep.render();
    return rep.passed() ? 0 : 1;
}

int cmd_ideal(const Options& o)
{
    auto a = select_algebra(o);
    Word w;
    try {
        w = parse_word(o.word);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad word: ") + e.what());
    }
    for (int i : w)
        if (i < 1 || i > a->vertex_count())
            throw UsageError("vertex " + std::to_string(i) + " out of range");
    auto ideal = ideal_for_word(a, w);
    std::cout << "algebra\t" << a->name() << "\n";
    std::cout << "word\t" << (w.empty() ? "e" : word_to_string(w)) << "\n";
    std::cout << "dim I\t" << ideal.dim() << "\n";
    std::cout << "idempotent\t" << (is_idempotent_ideal(ideal) ? "yes" : "no") << "\n";
    std::cout << "dim A/I\t" << a->dim() - ideal.dim() << "\n";
    try {
        Setting s = make_setting(a);
        auto imod = share(module_of_ideal(ideal));
        std::cout << "summands of I\t" << (imod->is_zero() ? "0" : render_sum(s, summand_ids(s, imod))) << "\n";
        auto members = gen_class(s, imod);
        std::cout << "gen(I)\t" << render_wide(s, members) << "\n";
    } catch (const RegistryOverflow& e) {
        std::cout << "gen(I)\tnot computed: " << e.what() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Preprojective algebras, Weyl groups and homological embeddings"};
    app.require_subcommand(1);
    Options o;

    auto* classify = app.add_subcommand("classify", "classify weakly homological embeddings by Weyl group elements");
    add_algebra_options(classify, o);
    classify->add_option("--format", o.format, "tsv or json");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_algebra_options(verify, o);
    verify->add_option("--suite", o.suite, "suite name")->required();
    verify->add_option("--ext-bound", o.ext_bound, "largest syzygy degree searched");
    verify->add_option("--max-registry", o.max_registry, "refuse brute-force enumeration above this many classes");

    auto* ideal = app.add_subcommand("ideal", "describe the ideal I_w of a word");
    add_algebra_options(ideal, o);
    ideal->add_option("--word", o.word, "comma-separated vertices, e.g. 3,2,3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify)
            return cmd_classify(o);
        if (*verify)
            return cmd_verify(o);
        return cmd_ideal(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedInput& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const RegistryOverflow& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const ConfigurationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
