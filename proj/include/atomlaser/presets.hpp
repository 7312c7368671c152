#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomlaser/params.hpp"
#include "atomlaser/table.hpp"

namespace atomlaser::scan
{

enum class Observable
{
	MandelQA,
	MandelQB,
	SqueezingS2B,
};

std::string observable_name(Observable o);

struct Curve
{
	std::string label;
	ModelParams params;
};

struct FigurePreset
{
	std::string id;
	Observable observable = Observable::SqueezingS2B;
	std::vector<Curve> curves;
	TimeGrid grid;
};

std::vector<std::string> preset_ids();

/// Throws UnknownPreset.
FigurePreset figure_preset(std::string_view id);

/// Evaluates the closed-form observable of every curve on the grid.
Table evaluate_curves(Observable observable, const std::vector<Curve>& curves, const TimeGrid& grid);

Table evaluate_figure(const FigurePreset& preset, const std::optional<TimeGrid>& grid = std::nullopt);

/// One S2_b curve per offset, with omega' = base.omega_prime + delta.
std::vector<Curve> sensitivity_curves(const ModelParams& base, std::span<const double> deltas);

Table sensitivity_table(const ModelParams& base, std::span<const double> deltas, const TimeGrid& grid);

} // namespace atomlaser::scan
