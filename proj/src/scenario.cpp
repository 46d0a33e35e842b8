// SPDX-License-Identifier: Apache-2.0
//
// vlcmux - space and wavelength multiplexing simulator for VLC MIMO-OFDM links
// Copyright (C) 2026 The vlcmux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "vlcmux/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include "vlcmux/units.hpp"

namespace vlcmux {

using nlohmann::json;

const char* family_name(Family f)
{
    switch (f) {
    case Family::Sd:
        return "sd";
    case Family::Wd:
        return "wd";
    case Family::Scwd:
        return "scwd";
    }
    return "?";
}

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

// Reads one JSON object, tracking which keys were consumed so that anything
// left over can be rejected.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            throw ScenarioError(path_, "expected an object");
    }

    bool has(const char* key) const { return node_.contains(key); }

    void read(const char* key, double& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_number())
                throw ScenarioError(join(path_, key), "expected a number, got " + v->dump());
            out = v->get<double>();
            if (!std::isfinite(out))
                throw ScenarioError(join(path_, key), "value must be finite");
        }
    }

    void read(const char* key, int& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_number_integer())
                throw ScenarioError(join(path_, key), "expected an integer, got " + v->dump());
            out = v->get<int>();
        }
    }

    void read(const char* key, std::uint64_t& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_number_unsigned())
                throw ScenarioError(join(path_, key), "expected a non-negative integer, got " + v->dump());
            out = v->get<std::uint64_t>();
        }
    }

    void read(const char* key, bool& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_boolean())
                throw ScenarioError(join(path_, key), "expected true or false, got " + v->dump());
            out = v->get<bool>();
        }
    }

    void read(const char* key, std::string& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_string())
                throw ScenarioError(join(path_, key), "expected a string, got " + v->dump());
            out = v->get<std::string>();
        }
    }

    std::vector<double> numbers(const char* key)
    {
        const json* v = require(key);
        if (!v->is_array())
            throw ScenarioError(join(path_, key), "expected an array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v->size(); ++i) {
            const json& e = (*v)[i];
            if (!e.is_number() || !std::isfinite(e.get<double>()))
                throw ScenarioError(join(path_, key) + "[" + std::to_string(i) + "]", "expected a finite number");
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::vector<Vec2> points(const char* key)
    {
        const json* v = require(key);
        if (!v->is_array())
            throw ScenarioError(join(path_, key), "expected an array of [x, y] pairs");
        std::vector<Vec2> out;
        for (std::size_t i = 0; i < v->size(); ++i) {
            const json& e = (*v)[i];
            const std::string where = join(path_, key) + "[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ScenarioError(where, "expected an [x, y] pair of numbers");
            out.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return out;
    }

    const json* take(const char* key)
    {
        seen_.insert(key);
        auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    const json* require(const char* key)
    {
        const json* v = take(key);
        if (v == nullptr)
            throw ScenarioError(join(path_, key), "missing required key");
        return v;
    }

    Section child(const char* key)
    {
        const json* v = take(key);
        static const json empty = json::object();
        return Section(v ? *v : empty, join(path_, key));
    }

    const std::string& path() const { return path_; }

    void finish() const
    {
        for (auto it = node_.begin(); it != node_.end(); ++it)
            if (!seen_.count(it.key()))
                throw ScenarioError(join(path_, it.key()), "unknown key");
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

ReceiverKind parse_receiver(const std::string& s, const std::string& key)
{
    if (s == "pyramid")
        return ReceiverKind::Pyramid;
    if (s == "hemispheric")
        return ReceiverKind::Hemispheric;
    throw ScenarioError(key, "expected \"pyramid\" or \"hemispheric\", got \"" + s + "\"");
}

const char* receiver_name(ReceiverKind k) { return k == ReceiverKind::Pyramid ? "pyramid" : "hemispheric"; }

void parse_parameters(Section& sec, Scenario& sc)
{
    auto& st = sc.strategy;
    switch (st.variant) {
    case Family::Sd: {
        SdStrategy s;
        s.led_xy = sec.points("led_xy_m");
        sec.read("half_power_deg", s.half_power_deg);
        sec.read("fov_order", s.fov_order);
        st.parameters = s;
        break;
    }
    case Family::Wd: {
        WdStrategy s;
        s.led_nm = sec.numbers("led_nm");
        s.filter_nm = sec.numbers("filter_nm");
        sec.read("filter_width_nm", s.filter_width_nm);
        st.parameters = s;
        break;
    }
    case Family::Scwd: {
        ScwdStrategy s;
        s.cluster_xy = sec.points("cluster_xy_m");
        s.led_nm = sec.numbers("led_nm");
        s.filter_nm = sec.numbers("filter_nm");
        sec.read("filter_width_nm", s.filter_width_nm);
        sec.read("half_power_deg", s.half_power_deg);
        sec.read("fov_order", s.fov_order);
        st.parameters = s;
        break;
    }
    }
    sec.finish();
}

json points_json(const std::vector<Vec2>& xy)
{
    json a = json::array();
    for (const auto& p : xy)
        a.push_back({p.x(), p.y()});
    return a;
}

} // namespace

SystemParameters Scenario::system() const
{
    SystemParameters s;
    s.room.width = room.width_m;
    s.room.length = room.length_m;
    s.room.height = room.height_m;
    s.room.tx_height = room.tx_height_m;
    s.room.rx_height = room.rx_height_m;
    s.front_end.led_bandwidth = from_mhz(frontend.led_bandwidth_mhz);
    s.front_end.pd_bandwidth = from_mhz(frontend.pd_bandwidth_mhz);
    s.front_end.symbol_period = 1.0 / (2.0 * from_mhz(frontend.modulation_bandwidth_mhz));
    s.front_end.rrc_rolloff = frontend.rrc_rolloff;
    s.front_end.fft_size = frontend.fft_size;
    s.front_end.cyclic_prefix = frontend.cyclic_prefix;
    s.load_resistance = noise.load_resistance_ohm;
    s.temperature = noise.temperature_k;
    s.total_power = power.total_optical_w;
    s.clip_level = power.clip_level;
    s.pd_area = optics.pd_area_cm2 * 1e-4;
    s.responsivity.quantum_efficiency = optics.quantum_efficiency;
    s.effective_index = optics.effective_index;
    s.filter_transmittance = optics.filter_transmittance;
    s.band_min_nm = optics.band_min_nm;
    s.band_max_nm = optics.band_max_nm;
    s.gap_db = link.gap_db;
    return s;
}

McConfig Scenario::mc(int threads) const
{
    McConfig m;
    m.samples = monte_carlo.samples;
    m.seed = monte_carlo.seed;
    m.orientation = random_orientation ? OrientationModel::random_laplace() : OrientationModel::upward();
    m.threads = threads;
    return m;
}

OptimizerOptions Scenario::optimizer_options() const
{
    OptimizerOptions o;
    o.max_iterations = optimizer.max_iterations;
    o.poll_threshold = optimizer.poll_threshold;
    return o;
}

StrategyConfig Scenario::strategy_config(int clusters) const
{
    const SystemParameters sys = system();
    if (strategy.parameters) {
        StrategyConfig cfg = *strategy.parameters;
        if (auto* sd = std::get_if<SdStrategy>(&cfg)) {
            sd->receiver = receiver.kind;
            sd->theta_pd_deg = receiver.theta_pd_deg;
        } else if (auto* wd = std::get_if<WdStrategy>(&cfg)) {
            wd->processing = strategy.processing;
        } else if (auto* sc = std::get_if<ScwdStrategy>(&cfg)) {
            sc->elements = strategy.elements;
            sc->receiver = receiver.kind;
            sc->theta_pd_deg = receiver.theta_pd_deg;
        }
        return cfg;
    }
    switch (strategy.variant) {
    case Family::Sd: {
        SdStrategy s = empirical_sd_strategy(strategy.elements, sys.room, receiver.kind);
        s.theta_pd_deg = receiver.theta_pd_deg;
        return s;
    }
    case Family::Wd:
        return empirical_wd_strategy(strategy.elements, sys, strategy.processing);
    case Family::Scwd: {
        const int l = strategy.clusters ? *strategy.clusters : clusters;
        if (l < 1)
            throw ScenarioError("strategy.clusters", "a cluster count is required here");
        ScwdStrategy s = empirical_scwd_strategy(strategy.elements, l, sys, receiver.kind);
        s.theta_pd_deg = receiver.theta_pd_deg;
        return s;
    }
    }
    throw ScenarioError("strategy.variant", "unknown variant");
}

void Scenario::validate() const
{
    auto check = [](bool ok, const char* key, const std::string& what) {
        if (!ok)
            throw ScenarioError(key, what);
    };
    auto wrap = [](const char* key, auto&& fn) {
        try {
            fn();
        } catch (const ScenarioError&) {
            throw;
        } catch (const std::exception& e) {
            throw ScenarioError(key, e.what());
        }
    };

    check(frontend.modulation_bandwidth_mhz > 0.0, "frontend.modulation_bandwidth_mhz", "must be positive");
    check(optics.pd_area_cm2 > 0.0, "optics.pd_area_cm2", "must be positive");
    wrap("room", [&] { system().room.validate(); });
    wrap("frontend", [&] { system().front_end.validate(); });
    wrap("system", [&] { system().validate(); });

    const int n = strategy.elements;
    check(n >= 1, "strategy.elements", "must be at least 1");
    if (strategy.clusters) {
        check(strategy.variant == Family::Scwd, "strategy.clusters", "only valid for the scwd variant");
        check(*strategy.clusters >= 1 && *strategy.clusters <= n, "strategy.clusters",
              "must lie in [1, elements]");
    }
    check(receiver.theta_pd_deg >= 0.0 && receiver.theta_pd_deg <= 90.0, "receiver.theta_pd_deg",
          "must lie in [0, 90]");
    check(monte_carlo.samples >= 1, "monte_carlo.samples", "must be at least 1");
    check(optimizer.starts >= 1, "optimizer.starts", "must be at least 1");
    check(optimizer.samples >= 1, "optimizer.samples", "must be at least 1");
    check(optimizer.max_iterations >= 0, "optimizer.max_iterations", "must be non-negative");
    check(optimizer.poll_threshold > 0.0, "optimizer.poll_threshold", "must be positive");

    if (strategy.parameters) {
        const auto& p = *strategy.parameters;
        if (const auto* sd = std::get_if<SdStrategy>(&p)) {
            check(static_cast<int>(sd->led_xy.size()) == n, "strategy.parameters.led_xy_m",
                  "needs one position per element");
        } else if (const auto* wd = std::get_if<WdStrategy>(&p)) {
            check(static_cast<int>(wd->led_nm.size()) == n, "strategy.parameters.led_nm",
                  "needs one wavelength per element");
            check(static_cast<int>(wd->filter_nm.size()) == n, "strategy.parameters.filter_nm",
                  "needs one filter per element");
        } else if (const auto* sc = std::get_if<ScwdStrategy>(&p)) {
            const int l = sc->clusters();
            check(l >= 1 && l <= n, "strategy.parameters.cluster_xy_m", "needs between 1 and elements clusters");
            check(!strategy.clusters || *strategy.clusters == l, "strategy.clusters",
                  "does not match the number of cluster positions");
            const int m = (n + l - 1) / l;
            check(static_cast<int>(sc->led_nm.size()) == m, "strategy.parameters.led_nm",
                  "needs ceil(elements / clusters) wavelengths");
            check(static_cast<int>(sc->filter_nm.size()) == m, "strategy.parameters.filter_nm",
                  "needs ceil(elements / clusters) filters");
        }
        wrap("strategy.parameters", [&] { (void)build_scene(strategy_config(), system()); });
    }
}

Scenario parse_scenario(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
        const auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
        throw ScenarioError("", "syntax error at line " + std::to_string(line) + ": " + e.what());
    }

    Scenario sc;
    Section top(root, "");

    {
        Section s = top.child("room");
        s.read("width_m", sc.room.width_m);
        s.read("length_m", sc.room.length_m);
        s.read("height_m", sc.room.height_m);
        s.read("tx_height_m", sc.room.tx_height_m);
        s.read("rx_height_m", sc.room.rx_height_m);
        s.finish();
    }
    {
        Section s = top.child("frontend");
        s.read("led_bandwidth_mhz", sc.frontend.led_bandwidth_mhz);
        s.read("pd_bandwidth_mhz", sc.frontend.pd_bandwidth_mhz);
        s.read("modulation_bandwidth_mhz", sc.frontend.modulation_bandwidth_mhz);
        s.read("rrc_rolloff", sc.frontend.rrc_rolloff);
        s.read("fft_size", sc.frontend.fft_size);
        s.read("cyclic_prefix", sc.frontend.cyclic_prefix);
        s.finish();
    }
    {
        Section s = top.child("noise");
        s.read("load_resistance_ohm", sc.noise.load_resistance_ohm);
        s.read("temperature_k", sc.noise.temperature_k);
        s.finish();
    }
    {
        Section s = top.child("power");
        s.read("total_optical_w", sc.power.total_optical_w);
        s.read("clip_level", sc.power.clip_level);
        s.finish();
    }
    {
        Section s = top.child("optics");
        s.read("pd_area_cm2", sc.optics.pd_area_cm2);
        s.read("quantum_efficiency", sc.optics.quantum_efficiency);
        s.read("effective_index", sc.optics.effective_index);
        s.read("filter_transmittance", sc.optics.filter_transmittance);
        s.read("band_min_nm", sc.optics.band_min_nm);
        s.read("band_max_nm", sc.optics.band_max_nm);
        s.finish();
    }
    {
        Section s = top.child("link");
        s.read("gap_db", sc.link.gap_db);
        s.finish();
    }
    {
        Section s = top.child("strategy");
        std::string variant = "sd";
        s.read("variant", variant);
        if (variant == "sd")
            sc.strategy.variant = Family::Sd;
        else if (variant == "wd")
            sc.strategy.variant = Family::Wd;
        else if (variant == "scwd")
            sc.strategy.variant = Family::Scwd;
        else
            throw ScenarioError("strategy.variant", "expected \"sd\", \"wd\" or \"scwd\", got \"" + variant + "\"");
        s.read("elements", sc.strategy.elements);
        if (const json* c = s.take("clusters")) {
            if (c->is_string() && c->get<std::string>() == "best")
                sc.strategy.clusters.reset();
            else if (c->is_number_integer())
                sc.strategy.clusters = c->get<int>();
            else
                throw ScenarioError("strategy.clusters", "expected an integer or \"best\", got " + c->dump());
        }
        s.read("processing", sc.strategy.processing);
        if (s.has("parameters")) {
            Section p = s.child("parameters");
            parse_parameters(p, sc);
        }
        s.finish();
    }
    {
        Section s = top.child("receiver");
        std::string kind = "pyramid";
        s.read("kind", kind);
        sc.receiver.kind = parse_receiver(kind, "receiver.kind");
        s.read("theta_pd_deg", sc.receiver.theta_pd_deg);
        s.finish();
    }
    {
        Section s = top.child("orientation");
        std::string model = "upward";
        s.read("model", model);
        if (model == "upward")
            sc.random_orientation = false;
        else if (model == "random")
            sc.random_orientation = true;
        else
            throw ScenarioError("orientation.model", "expected \"upward\" or \"random\", got \"" + model + "\"");
        s.finish();
    }
    {
        Section s = top.child("monte_carlo");
        s.read("samples", sc.monte_carlo.samples);
        s.read("seed", sc.monte_carlo.seed);
        s.finish();
    }
    {
        Section s = top.child("optimizer");
        s.read("starts", sc.optimizer.starts);
        s.read("samples", sc.optimizer.samples);
        s.read("max_iterations", sc.optimizer.max_iterations);
        s.read("poll_threshold", sc.optimizer.poll_threshold);
        s.finish();
    }
    top.finish();

    sc.validate();
    return sc;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ScenarioError("", "cannot open scenario file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& sc)
{
    // ordered_json keeps sections in the documented order
    nlohmann::ordered_json j;
    j["room"] = {{"width_m", sc.room.width_m},
                 {"length_m", sc.room.length_m},
                 {"height_m", sc.room.height_m},
                 {"tx_height_m", sc.room.tx_height_m},
                 {"rx_height_m", sc.room.rx_height_m}};
    j["frontend"] = {{"led_bandwidth_mhz", sc.frontend.led_bandwidth_mhz},
                     {"pd_bandwidth_mhz", sc.frontend.pd_bandwidth_mhz},
                     {"modulation_bandwidth_mhz", sc.frontend.modulation_bandwidth_mhz},
                     {"rrc_rolloff", sc.frontend.rrc_rolloff},
                     {"fft_size", sc.frontend.fft_size},
                     {"cyclic_prefix", sc.frontend.cyclic_prefix}};
    j["noise"] = {{"load_resistance_ohm", sc.noise.load_resistance_ohm}, {"temperature_k", sc.noise.temperature_k}};
    j["power"] = {{"total_optical_w", sc.power.total_optical_w}, {"clip_level", sc.power.clip_level}};
    j["optics"] = {{"pd_area_cm2", sc.optics.pd_area_cm2},
                   {"quantum_efficiency", sc.optics.quantum_efficiency},
                   {"effective_index", sc.optics.effective_index},
                   {"filter_transmittance", sc.optics.filter_transmittance},
                   {"band_min_nm", sc.optics.band_min_nm},
                   {"band_max_nm", sc.optics.band_max_nm}};
    j["link"] = {{"gap_db", sc.link.gap_db}};

    nlohmann::ordered_json st;
    st["variant"] = family_name(sc.strategy.variant);
    st["elements"] = sc.strategy.elements;
    if (sc.strategy.variant == Family::Scwd) {
        if (sc.strategy.clusters)
            st["clusters"] = *sc.strategy.clusters;
        else
            st["clusters"] = "best";
    }
    if (sc.strategy.variant == Family::Wd)
        st["processing"] = sc.strategy.processing;
    if (sc.strategy.parameters) {
        nlohmann::ordered_json p;
        const auto& cfg = *sc.strategy.parameters;
        if (const auto* s = std::get_if<SdStrategy>(&cfg)) {
            p["led_xy_m"] = points_json(s->led_xy);
            p["half_power_deg"] = s->half_power_deg;
            p["fov_order"] = s->fov_order;
        } else if (const auto* s = std::get_if<WdStrategy>(&cfg)) {
            p["led_nm"] = s->led_nm;
            p["filter_nm"] = s->filter_nm;
            p["filter_width_nm"] = s->filter_width_nm;
        } else if (const auto* s = std::get_if<ScwdStrategy>(&cfg)) {
            p["cluster_xy_m"] = points_json(s->cluster_xy);
            p["led_nm"] = s->led_nm;
            p["filter_nm"] = s->filter_nm;
            p["filter_width_nm"] = s->filter_width_nm;
            p["half_power_deg"] = s->half_power_deg;
            p["fov_order"] = s->fov_order;
        }
        st["parameters"] = p;
    }
    j["strategy"] = st;

    j["receiver"] = {{"kind", receiver_name(sc.receiver.kind)}, {"theta_pd_deg", sc.receiver.theta_pd_deg}};
    j["orientation"] = {{"model", sc.random_orientation ? "random" : "upward"}};
    j["monte_carlo"] = {{"samples", sc.monte_carlo.samples}, {"seed", sc.monte_carlo.seed}};
    j["optimizer"] = {{"starts", sc.optimizer.starts},
                      {"samples", sc.optimizer.samples},
                      {"max_iterations", sc.optimizer.max_iterations},
                      {"poll_threshold", sc.optimizer.poll_threshold}};
    return j.dump(2) + "\n";
}

void set_parameters(Scenario& sc, const StrategyConfig& strategy)
{
    if (const auto* s = std::get_if<SdStrategy>(&strategy)) {
        sc.strategy.variant = Family::Sd;
        sc.strategy.elements = static_cast<int>(s->led_xy.size());
        sc.strategy.clusters.reset();
        sc.receiver.kind = s->receiver;
        sc.receiver.theta_pd_deg = s->theta_pd_deg;
    } else if (const auto* s = std::get_if<WdStrategy>(&strategy)) {
        sc.strategy.variant = Family::Wd;
        sc.strategy.elements = static_cast<int>(s->led_nm.size());
        sc.strategy.clusters.reset();
        sc.strategy.processing = s->processing;
    } else if (const auto* s = std::get_if<ScwdStrategy>(&strategy)) {
        sc.strategy.variant = Family::Scwd;
        sc.strategy.elements = s->elements;
        sc.strategy.clusters = s->clusters();
        sc.receiver.kind = s->receiver;
        sc.receiver.theta_pd_deg = s->theta_pd_deg;
    }
    sc.strategy.parameters = strategy;
}

} // namespace vlcmux
