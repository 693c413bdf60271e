#include "dyadic/function_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dyadic {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

void store_json(const nlohmann::ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::invalid_argument("write failed: " + path);
}

} // namespace

nlohmann::ordered_json function_to_json(const LCFunction& f) {
    nlohmann::ordered_json j;
    j["resolution"] = f.resolution();
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (const Rational& v : f.values()) vals.push_back(to_string(v));
    j["values"] = std::move(vals);
    return j;
}

LCFunction function_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("resolution") || !j.contains("values")) {
        throw std::invalid_argument("function object needs 'resolution' and 'values'");
    }
    const auto& res = j.at("resolution");
    if (!res.is_number_integer() || res.get<std::int64_t>() < 0 ||
        res.get<std::int64_t>() > 30) {
        throw std::invalid_argument("'resolution' must be a small nonnegative integer");
    }
    const unsigned J = res.get<unsigned>();
    const auto& vals = j.at("values");
    if (!vals.is_array() || vals.size() != (std::size_t{1} << J)) {
        throw std::invalid_argument("'values' must hold exactly 2^resolution entries");
    }
    std::vector<Rational> out;
    out.reserve(vals.size());
    for (const auto& v : vals) {
        if (!v.is_string()) throw std::invalid_argument("values must be strings");
        out.push_back(parse_rational(v.get<std::string>()));
    }
    return LCFunction(J, std::move(out));
}

LCFunction read_function_file(const std::string& path) {
    return function_from_json(load_json(path));
}

void write_function_file(const LCFunction& f, const std::string& path) {
    store_json(function_to_json(f), path);
}

nlohmann::ordered_json block_sequence_to_json(const BlockSequence& b) {
    nlohmann::ordered_json j;
    j["mean"] = to_string(b.mean);
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const LCFunction& blk : b.blocks) blocks.push_back(function_to_json(blk));
    j["blocks"] = std::move(blocks);
    return j;
}

BlockSequence block_sequence_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("mean") || !j.contains("blocks")) {
        throw std::invalid_argument("blocks object needs 'mean' and 'blocks'");
    }
    if (!j.at("mean").is_string() || !j.at("blocks").is_array()) {
        throw std::invalid_argument("malformed blocks object");
    }
    BlockSequence out;
    out.mean = parse_rational(j.at("mean").get<std::string>());
    for (const auto& blk : j.at("blocks")) {
        out.blocks.push_back(function_from_json(blk));
    }
    return out;
}

BlockSequence read_blocks_file(const std::string& path) {
    return block_sequence_from_json(load_json(path));
}

void write_blocks_file(const BlockSequence& b, const std::string& path) {
    store_json(block_sequence_to_json(b), path);
}

nlohmann::ordered_json norm_report_to_json(const NormReport& report) {
    nlohmann::ordered_json j;
    if (report.exact) {
        j["exact"] = to_string(*report.exact);
    } else {
        j["exact"] = nullptr;
    }
    j["exact_is_qth_power"] = report.exact_is_qth_power;
    j["float"] = report.value.to_string();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const BigFloat& t : report.terms) terms.push_back(t.to_string());
    j["terms"] = std::move(terms);
    return j;
}

std::string decimal_string(const Rational& x, unsigned precision) {
    return BigFloat::from_rational(x, precision).to_string();
}

std::string sweep_csv_header() {
    return "j0,j1,q,exponent,alpha,beta,l2_sq,besov_1q1,besov_neg1_inf_inf,ratio";
}

std::string sweep_row_csv(const SweepRow& row, unsigned precision) {
    std::ostringstream out;
    out << row.config.j0 << ',' << row.config.j1() << ',' << row.config.q.str()
        << ',' << decimal_string(row.config.eps.exponent, precision) << ','
        << decimal_string(row.config.alpha, precision) << ','
        << decimal_string(row.config.beta(), precision) << ','
        << decimal_string(row.norms.l2_sq, precision) << ','
        << row.norms.b_1q1.to_string() << ','
        << decimal_string(row.norms.b_neg1_inf_inf, precision) << ','
        << row.ratio.value.to_string();
    return out.str();
}

nlohmann::ordered_json sweep_row_json(const SweepRow& row, unsigned precision) {
    nlohmann::ordered_json j;
    j["j0"] = row.config.j0;
    j["j1"] = row.config.j1();
    j["q"] = row.config.q.str();
    j["exponent"] = decimal_string(row.config.eps.exponent, precision);
    j["alpha"] = decimal_string(row.config.alpha, precision);
    j["beta"] = decimal_string(row.config.beta(), precision);
    j["l2_sq"] = decimal_string(row.norms.l2_sq, precision);
    j["besov_1q1"] = row.norms.b_1q1.to_string();
    j["besov_neg1_inf_inf"] = decimal_string(row.norms.b_neg1_inf_inf, precision);
    j["ratio"] = row.ratio.value.to_string();

    nlohmann::ordered_json exact;
    exact["exponent"] = to_string(row.config.eps.exponent);
    exact["alpha"] = to_string(row.config.alpha);
    exact["beta"] = to_string(row.config.beta());
    exact["l2_sq"] = to_string(row.norms.l2_sq);
    exact[row.norms.b_1q1_is_qth_power ? "besov_1q1_pow_q" : "besov_1q1"] =
        to_string(row.norms.b_1q1_exact);
    exact["besov_neg1_inf_inf"] = to_string(row.norms.b_neg1_inf_inf);
    if (row.ratio.exact) exact["ratio"] = to_string(*row.ratio.exact);
    j["exact"] = std::move(exact);
    return j;
}

} // namespace dyadic
