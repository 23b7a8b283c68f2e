#include "config.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include <tnl/errors.hpp>

namespace tnl::cli {

using nlohmann::json;

std::string_view to_string(Command c) noexcept {
    switch (c) {
        case Command::Solve: return "solve";
        case Command::Validate: return "validate";
        case Command::Figures: return "figures";
    }
    return "?";
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Closed: return "closed";
        case Method::Oracle: return "oracle";
        case Method::Appendix: return "appendix";
    }
    return "?";
}

void RunConfig::validate() const {
    params.validate();
    lagrangian.validate();
    require(std::isfinite(q0) && std::isfinite(v0), ErrorKind::InvalidArgument,
            "config: q0 and v0 must be finite");
    require(!qbar || std::isfinite(*qbar), ErrorKind::InvalidArgument,
            "config: qbar must be finite");
    require(std::isfinite(t_end) && t_end > 0.0, ErrorKind::InvalidArgument,
            "config: t-end must be positive");
    require(n >= 5, ErrorKind::InvalidArgument, "config: n must be at least 5");
    require(jobs >= 1, ErrorKind::InvalidArgument, "config: jobs must be at least 1");
    require(!gammas.empty(), ErrorKind::InvalidArgument, "config: empty gamma list");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        require(std::isfinite(gammas[i]) && gammas[i] > 0.0, ErrorKind::InvalidArgument,
                "config: gammas must be positive");
        require(i == 0 || gammas[i] > gammas[i - 1], ErrorKind::InvalidArgument,
                "config: gammas must be increasing");
    }
}

RunConfig default_config(Command command) {
    RunConfig c;
    c.command = command;
    c.lagrangian.m = 1.0;
    c.lagrangian.A = 0.4;
    c.lagrangian.B = -0.7;
    c.lagrangian.C = 0.2;
    c.lagrangian.D = 0.5;
    c.lagrangian.E = 0.3;
    c.lagrangian.F = -0.8;
    c.lagrangian.G = 0.6;
    c.lagrangian.H = 0.25;
    c.lagrangian.kernel = MemoryKernel::exponential(1.5);
    if (command == Command::Figures) {
        c.params = {1.0, 1.0, 1e6, 1.0};
        c.t_end = 2.0;
        c.n = 20001;
    }
    return c;
}

namespace {

double number(const json& j, const char* key) {
    if (!j.is_number()) fail(ErrorKind::InvalidArgument, std::string("config: '") + key + "' must be a number");
    return j.get<double>();
}

MemoryKernel kernel_from(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        fail(ErrorKind::InvalidArgument, "config: kernel needs a string 'type'");
    }
    const auto type = j["type"].get<std::string>();
    if (type == "exponential") {
        if (!j.contains("gamma")) fail(ErrorKind::InvalidArgument, "config: exponential kernel needs 'gamma'");
        return MemoryKernel::exponential(number(j["gamma"], "gamma"));
    }
    if (type == "dirac") return MemoryKernel::dirac();
    fail(ErrorKind::InvalidArgument, "config: unknown kernel type '" + type + "'");
}

GeneralLagrangianSpec lagrangian_from(const json& j) {
    if (!j.is_object()) fail(ErrorKind::InvalidArgument, "config: lagrangian must be an object");
    GeneralLagrangianSpec spec;
    double* coeff[] = {&spec.A, &spec.B, &spec.C, &spec.D, &spec.E, &spec.F, &spec.G, &spec.H};
    const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
    for (const auto& [key, value] : j.items()) {
        if (key == "m") {
            spec.m = number(value, "m");
        } else if (key == "coeffs") {
            if (!value.is_array() || value.size() != 8) {
                fail(ErrorKind::InvalidArgument, "config: 'coeffs' must hold 8 numbers (A..H)");
            }
            for (std::size_t i = 0; i < 8; ++i) *coeff[i] = number(value[i], "coeffs");
        } else if (key == "kernel") {
            spec.kernel = kernel_from(value);
        } else {
            bool found = false;
            for (std::size_t i = 0; i < 8 && !found; ++i) {
                if (key == names[i]) {
                    *coeff[i] = number(value, names[i]);
                    found = true;
                }
            }
            if (!found) fail(ErrorKind::InvalidArgument, "config: unknown lagrangian key '" + key + "'");
        }
    }
    if (j.contains("coeffs")) {
        for (const char* name : names) {
            if (j.contains(name)) {
                fail(ErrorKind::InvalidArgument, "config: give either 'coeffs' or A..H, not both");
            }
        }
    }
    spec.validate();
    return spec;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::InvalidArgument, std::string("config: malformed JSON: ") + e.what());
    }
}

template <class Enum>
Enum variant_from(const json& j, const char* key) {
    if (!j.is_string()) fail(ErrorKind::InvalidArgument, std::string("config: '") + key + "' must be a string");
    const auto v = j.get<std::string>();
    if (v == "derived") return Enum::Derived;
    if (v == "paper") return Enum::PaperLiteral;
    fail(ErrorKind::InvalidArgument, std::string("config: '") + key + "' must be derived or paper");
}

}  // namespace

RunConfig apply_json(RunConfig c, const std::string& json_text) {
    const json doc = parse(json_text);
    if (!doc.is_object()) fail(ErrorKind::InvalidArgument, "config: top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "m") c.params.m = number(value, "m");
        else if (key == "k") c.params.k = number(value, "k");
        else if (key == "ktilde") c.params.ktilde = number(value, "ktilde");
        else if (key == "gamma") c.params.gamma = number(value, "gamma");
        else if (key == "q0") c.q0 = number(value, "q0");
        else if (key == "v0") c.v0 = number(value, "v0");
        else if (key == "qbar") c.qbar = number(value, "qbar");
        else if (key == "t_end") c.t_end = number(value, "t_end");
        else if (key == "n") {
            if (!value.is_number_integer() || value.get<long long>() < 0) {
                fail(ErrorKind::InvalidArgument, "config: 'n' must be a non-negative integer");
            }
            c.n = value.get<std::size_t>();
        } else if (key == "jobs") {
            if (!value.is_number_integer() || value.get<long long>() < 1) {
                fail(ErrorKind::InvalidArgument, "config: 'jobs' must be a positive integer");
            }
            c.jobs = value.get<unsigned>();
        } else if (key == "method") {
            const auto m = value.is_string() ? value.get<std::string>() : "";
            if (m == "closed") c.method = Method::Closed;
            else if (m == "oracle") c.method = Method::Oracle;
            else if (m == "appendix") c.method = Method::Appendix;
            else fail(ErrorKind::InvalidArgument, "config: method must be closed, oracle or appendix");
        } else if (key == "variant_consistency") {
            c.consistency = variant_from<ConsistencyVariant>(value, "variant_consistency");
        } else if (key == "variant_kernel_order") {
            c.kernel_order = variant_from<KernelArgumentOrder>(value, "variant_kernel_order");
        } else if (key == "gammas") {
            if (value.is_string()) {
                c.gammas = parse_gamma_list(value.get<std::string>());
            } else if (value.is_array()) {
                c.gammas.clear();
                for (const auto& g : value) c.gammas.push_back(number(g, "gammas"));
            } else {
                fail(ErrorKind::InvalidArgument, "config: 'gammas' must be an array or a string");
            }
        } else if (key == "out") {
            if (!value.is_string()) fail(ErrorKind::InvalidArgument, "config: 'out' must be a string");
            c.out = value.get<std::string>();
        } else if (key == "lagrangian") {
            c.lagrangian = lagrangian_from(value);
        } else {
            fail(ErrorKind::InvalidArgument, "config: unknown key '" + key + "'");
        }
    }
    return c;
}

GeneralLagrangianSpec lagrangian_from_json(const std::string& json_text) {
    return lagrangian_from(parse(json_text));
}

std::string lagrangian_to_json(const GeneralLagrangianSpec& spec) {
    nlohmann::ordered_json j;
    j["m"] = spec.m;
    j["A"] = spec.A;
    j["B"] = spec.B;
    j["C"] = spec.C;
    j["D"] = spec.D;
    j["E"] = spec.E;
    j["F"] = spec.F;
    j["G"] = spec.G;
    j["H"] = spec.H;
    if (spec.kernel.is_dirac()) {
        j["kernel"] = {{"type", "dirac"}};
    } else if (spec.kernel.is_exponential()) {
        j["kernel"] = {{"type", "exponential"}, {"gamma", spec.kernel.gamma()}};
    } else {
        fail(ErrorKind::UnsupportedKernel, "config: tabulated kernels have no JSON form");
    }
    return j.dump();
}

std::vector<double> parse_gamma_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidArgument, "gammas: '" + item + "' is not a number");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        require(used == item.size(), ErrorKind::InvalidArgument,
                "gammas: '" + item + "' is not a number");
        out.push_back(v);
    }
    require(!out.empty(), ErrorKind::InvalidArgument, "gammas: empty list");
    return out;
}

}  // namespace tnl::cli
