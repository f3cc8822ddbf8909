// Generated by scripts/embed_cases.py from data/*.m. Do not edit.
#pragma once

#include <array>
#include <string_view>

namespace mmtd::detail {

struct BundledCaseText {
  std::string_view name;
  std::string_view source_file;
  std::string_view text;
};

inline constexpr std::string_view k_bus3_text = R"mpc(function mpc = bus3
%BUS3  Three-bus triangle test system.
%   Bus 1 is the reference bus. Line reactances 0.0504 / 0.0572 / 0.0636 p.u.,
%   loads 50 / 170 / 280 MW, generation 182 MW at bus 1 and 318 MW at bus 3.
%   Resistances are set to one tenth of the reactance (X/R = 10).

%% MATPOWER Case Format : Version 2
mpc.version = '2';

%% system MVA base
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	3	50	0	0	0	1	1	0	230	1	1.1	0.9;
	2	1	170	0	0	0	1	1	0	230	1	1.1	0.9;
	3	2	280	0	0	0	1	1	0	230	1	1.1	0.9;
];

%% generator data
%	bus	Pg	Qg	Qmax	Qmin	Vg	mBase	status	Pmax	Pmin
mpc.gen = [
	1	182	0	300	-300	1	100	1	400	0;
	3	318	0	300	-300	1	100	1	400	0;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	2	0.00504	0.0504	0	0	0	0	0	0	1	-360	360;
	1	3	0.00572	0.0572	0	0	0	0	0	0	1	-360	360;
	2	3	0.00636	0.0636	0	0	0	0	0	0	1	-360	360;
];
)mpc";

inline constexpr std::string_view k_bus6_text = R"mpc(function mpc = case6ww
%CASE6WW  Power flow data for 6 bus, 3 gen case from Wood & Wollenberg.
%   Please see CASEFORMAT for details on the case file format.
%
%   This is the 6 bus example from pp. 104, 112, 119, 123-124, 549 of
%   "Power Generation, Operation, and Control, 2nd Edition",
%   by Allen. J. Wood and Bruce F. Wollenberg, John Wiley & Sons, NY, Jan 1996.

%   MATPOWER

%% MATPOWER Case Format : Version 2
mpc.version = '2';

%%-----  Power Flow Data  -----%%
%% system MVA base
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	3	0	0	0	0	1	1.05	0	230	1	1.05	1.05;
	2	2	0	0	0	0	1	1.05	0	230	1	1.05	1.05;
	3	2	0	0	0	0	1	1.07	0	230	1	1.07	1.07;
	4	1	70	70	0	0	1	1	0	230	1	1.05	0.95;
	5	1	70	70	0	0	1	1	0	230	1	1.05	0.95;
	6	1	70	70	0	0	1	1	0	230	1	1.05	0.95;
];

%% generator data
%	bus	Pg	Qg	Qmax	Qmin	Vg	mBase	status	Pmax	Pmin	Pc1	Pc2	Qc1min	Qc1max	Qc2min	Qc2max	ramp_agc	ramp_10	ramp_30	ramp_q	apf
mpc.gen = [
	1	0	0	100	-100	1.05	100	1	200	50	0	0	0	0	0	0	0	0	0	0	0;
	2	50	0	100	-100	1.05	100	1	150	37.5	0	0	0	0	0	0	0	0	0	0	0;
	3	60	0	100	-100	1.07	100	1	180	45	0	0	0	0	0	0	0	0	0	0	0;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	2	0.1	0.2	0.04	40	40	40	0	0	1	-360	360;
	1	4	0.05	0.2	0.04	60	60	60	0	0	1	-360	360;
	1	5	0.08	0.3	0.06	40	40	40	0	0	1	-360	360;
	2	3	0.05	0.25	0.06	40	40	40	0	0	1	-360	360;
	2	4	0.05	0.1	0.02	60	60	60	0	0	1	-360	360;
	2	5	0.1	0.3	0.04	30	30	30	0	0	1	-360	360;
	2	6	0.07	0.2	0.05	90	90	90	0	0	1	-360	360;
	3	5	0.12	0.26	0.05	70	70	70	0	0	1	-360	360;
	3	6	0.02	0.1	0.02	80	80	80	0	0	1	-360	360;
	4	5	0.2	0.4	0.08	20	20	20	0	0	1	-360	360;
	5	6	0.1	0.3	0.06	40	40	40	0	0	1	-360	360;
];

%%-----  OPF Data  -----%%
%% generator cost data
%	1	startup	shutdown	n	x1	y1	...	xn	yn
%	2	startup	shutdown	n	c(n-1)	...	c0
mpc.gencost = [
	2	0	0	3	0.00533	11.669	213.1;
	2	0	0	3	0.00889	10.333	200;
	2	0	0	3	0.00741	10.833	240;
];
)mpc";

inline constexpr std::string_view k_bus14_text = R"mpc(function mpc = case14
%CASE14    Power flow data for IEEE 14 bus test case.
%   Please see CASEFORMAT for details on the case file format.
%   This data was converted from IEEE Common Data Format
%   (ieee14cdf.txt) on 15-Oct-2014 by cdf2matp, rev. 2393
%   See end of file for warnings generated during conversion.
%
%   Converted from IEEE CDF file from:
%       https://labs.ece.uw.edu/pstca/
% 
%  08/19/93 UW ARCHIVE           100.0  1962 W IEEE 14 Bus Test Case

%   MATPOWER

%% MATPOWER Case Format : Version 2
mpc.version = '2';

%%-----  Power Flow Data  -----%%
%% system MVA base
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	3	0	0	0	0	1	1.06	0	0	1	1.06	0.94;
	2	2	21.7	12.7	0	0	1	1.045	-4.98	0	1	1.06	0.94;
	3	2	94.2	19	0	0	1	1.01	-12.72	0	1	1.06	0.94;
	4	1	47.8	-3.9	0	0	1	1.019	-10.33	0	1	1.06	0.94;
	5	1	7.6	1.6	0	0	1	1.02	-8.78	0	1	1.06	0.94;
	6	2	11.2	7.5	0	0	1	1.07	-14.22	0	1	1.06	0.94;
	7	1	0	0	0	0	1	1.062	-13.37	0	1	1.06	0.94;
	8	2	0	0	0	0	1	1.09	-13.36	0	1	1.06	0.94;
	9	1	29.5	16.6	0	19	1	1.056	-14.94	0	1	1.06	0.94;
	10	1	9	5.8	0	0	1	1.051	-15.1	0	1	1.06	0.94;
	11	1	3.5	1.8	0	0	1	1.057	-14.79	0	1	1.06	0.94;
	12	1	6.1	1.6	0	0	1	1.055	-15.07	0	1	1.06	0.94;
	13	1	13.5	5.8	0	0	1	1.05	-15.16	0	1	1.06	0.94;
	14	1	14.9	5	0	0	1	1.036	-16.04	0	1	1.06	0.94;
];

%% generator data
%	bus	Pg	Qg	Qmax	Qmin	Vg	mBase	status	Pmax	Pmin	Pc1	Pc2	Qc1min	Qc1max	Qc2min	Qc2max	ramp_agc	ramp_10	ramp_30	ramp_q	apf
mpc.gen = [
	1	232.4	-16.9	10	0	1.06	100	1	332.4	0	0	0	0	0	0	0	0	0	0	0	0;
	2	40	42.4	50	-40	1.045	100	1	140	0	0	0	0	0	0	0	0	0	0	0	0;
	3	0	23.4	40	0	1.01	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	6	0	12.2	24	-6	1.07	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	8	0	17.4	24	-6	1.09	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	2	0.01938	0.05917	0.0528	0	0	0	0	0	1	-360	360;
	1	5	0.05403	0.22304	0.0492	0	0	0	0	0	1	-360	360;
	2	3	0.04699	0.19797	0.0438	0	0	0	0	0	1	-360	360;
	2	4	0.05811	0.17632	0.034	0	0	0	0	0	1	-360	360;
	2	5	0.05695	0.17388	0.0346	0	0	0	0	0	1	-360	360;
	3	4	0.06701	0.17103	0.0128	0	0	0	0	0	1	-360	360;
	4	5	0.01335	0.04211	0	0	0	0	0	0	1	-360	360;
	4	7	0	0.20912	0	0	0	0	0.978	0	1	-360	360;
	4	9	0	0.55618	0	0	0	0	0.969	0	1	-360	360;
	5	6	0	0.25202	0	0	0	0	0.932	0	1	-360	360;
	6	11	0.09498	0.1989	0	0	0	0	0	0	1	-360	360;
	6	12	0.12291	0.25581	0	0	0	0	0	0	1	-360	360;
	6	13	0.06615	0.13027	0	0	0	0	0	0	1	-360	360;
	7	8	0	0.17615	0	0	0	0	0	0	1	-360	360;
	7	9	0	0.11001	0	0	0	0	0	0	1	-360	360;
	9	10	0.03181	0.0845	0	0	0	0	0	0	1	-360	360;
	9	14	0.12711	0.27038	0	0	0	0	0	0	1	-360	360;
	10	11	0.08205	0.19207	0	0	0	0	0	0	1	-360	360;
	12	13	0.22092	0.19988	0	0	0	0	0	0	1	-360	360;
	13	14	0.17093	0.34802	0	0	0	0	0	0	1	-360	360;
];

%%-----  OPF Data  -----%%
%% generator cost data
%	1	startup	shutdown	n	x1	y1	...	xn	yn
%	2	startup	shutdown	n	c(n-1)	...	c0
mpc.gencost = [
	2	0	0	3	0.0430292599	20	0;
	2	0	0	3	0.25	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
];

%% bus names
mpc.bus_name = {
	'Bus 1     HV';
	'Bus 2     HV';
	'Bus 3     HV';
	'Bus 4     HV';
	'Bus 5     HV';
	'Bus 6     LV';
	'Bus 7     ZV';
	'Bus 8     TV';
	'Bus 9     LV';
	'Bus 10    LV';
	'Bus 11    LV';
	'Bus 12    LV';
	'Bus 13    LV';
	'Bus 14    LV';
};

% Warnings from cdf2matp conversion:
%
% ***** check the title format in the first line of the cdf file.
% ***** Qmax = Qmin at generator at bus    1 (Qmax set to Qmin + 10)
% ***** MVA limit of branch 1 - 2 not given, set to 0
% ***** MVA limit of branch 1 - 5 not given, set to 0
% ***** MVA limit of branch 2 - 3 not given, set to 0
% ***** MVA limit of branch 2 - 4 not given, set to 0
% ***** MVA limit of branch 2 - 5 not given, set to 0
% ***** MVA limit of branch 3 - 4 not given, set to 0
% ***** MVA limit of branch 4 - 5 not given, set to 0
% ***** MVA limit of branch 4 - 7 not given, set to 0
% ***** MVA limit of branch 4 - 9 not given, set to 0
% ***** MVA limit of branch 5 - 6 not given, set to 0
% ***** MVA limit of branch 6 - 11 not given, set to 0
% ***** MVA limit of branch 6 - 12 not given, set to 0
% ***** MVA limit of branch 6 - 13 not given, set to 0
% ***** MVA limit of branch 7 - 8 not given, set to 0
% ***** MVA limit of branch 7 - 9 not given, set to 0
% ***** MVA limit of branch 9 - 10 not given, set to 0
% ***** MVA limit of branch 9 - 14 not given, set to 0
% ***** MVA limit of branch 10 - 11 not given, set to 0
% ***** MVA limit of branch 12 - 13 not given, set to 0
% ***** MVA limit of branch 13 - 14 not given, set to 0
)mpc";

inline constexpr std::string_view k_bus39_text = R"mpc(function mpc = case39
%CASE39 Power flow data for 39 bus New England system.
%   Please see CASEFORMAT for details on the case file format.
%
%   Data taken from [1] with the following modifications/additions:
%
%       - renumbered gen buses consecutively (as in [2] and [4])
%       - added Pmin = 0 for all gens
%       - added Qmin, Qmax for gens at 31 & 39 (copied from gen at 35)
%       - added Vg based on V in bus data (missing for bus 39)
%       - added Vg, Pg, Pd, Qd at bus 39 from [2] (same in [4])
%       - added Pmax at bus 39: Pmax = Pg + 100
%       - added line flow limits and area data from [4]
%       - added voltage limits, Vmax = 1.06, Vmin = 0.94
%       - added identical quadratic generator costs
%       - increased Pmax for gen at bus 34 from 308 to 508
%         (assumed typo in [1], makes initial solved case feasible)
%       - re-solved power flow
% 
%   Notes:
%       - Bus 39, its generator and 2 connecting lines were added
%         (by authors of [1]) to represent the interconnection with
%         the rest of the eastern interconnect, and did not include
%         Vg, Pg, Qg, Pd, Qd, Pmin, Pmax, Qmin or Qmax.
%       - As the swing bus, bus 31 did not include and Q limits.
%       - The voltages, etc in [1] appear to be quite close to the
%         power flow solution of the case before adding bus 39 with
%         it's generator and connecting branches, though the solution
%         is not exact.
%       - Explicit voltage setpoints for gen buses are not given, so
%         they are taken from the bus data, however this results in two
%         binding Q limits at buses 34 & 37, so the corresponding
%         voltages have probably deviated from their original setpoints.
%       - The generator locations and types are as follows:
%           1   30      hydro
%           2   31      nuke01
%           3   32      nuke02
%           4   33      fossil02
%           5   34      fossil01
%           6   35      nuke03
%           7   36      fossil04
%           8   37      nuke04
%           9   38      nuke05
%           10  39      interconnection to rest of US/Canada
%
%   This is a solved power flow case, but it includes the following
%   violations:
%       - Pmax violated at bus 31: Pg = 677.87, Pmax = 646
%       - Qmin violated at bus 37: Qg = -1.37,  Qmin = 0
%
%   References:
%   [1] G. W. Bills, et.al., "On-Line Stability Analysis Study"
%       RP90-1 Report for the Edison Electric Institute, October 12, 1970,
%       pp. 1-20 - 1-35.
%       prepared by E. M. Gulachenski - New England Electric System
%                   J. M. Undrill     - General Electric Co.
%       "generally representative of the New England 345 KV system, but is
%        not an exact or complete model of any past, present or projected
%        configuration of the actual New England 345 KV system.
%   [2] M. A. Pai, Energy Function Analysis for Power System Stability,
%       Kluwer Academic Publishers, Boston, 1989.
%       (references [3] as source of data)
%   [3] Athay, T.; Podmore, R.; Virmani, S., "A Practical Method for the
%       Direct Analysis of Transient Stability," IEEE Transactions on Power
%       Apparatus and Systems , vol.PAS-98, no.2, pp.573-584, March 1979.
%       URL: https://doi.org/10.1109/TPAS.1979.319407
%       (references [1] as source of data)
%   [4] Data included with TC Calculator at http://www.pserc.cornell.edu/tcc/
%       for 39-bus system.

%   MATPOWER

%% MATPOWER Case Format : Version 2
mpc.version = '2';

%%-----  Power Flow Data  -----%%
%% system MVA base
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	1	97.6	44.2	0	0	2	1.0393836	-13.536602	345	1	1.06	0.94;
	2	1	0	0	0	0	2	1.0484941	-9.7852666	345	1	1.06	0.94;
	3	1	322	2.4	0	0	2	1.0307077	-12.276384	345	1	1.06	0.94;
	4	1	500	184	0	0	1	1.00446	-12.626734	345	1	1.06	0.94;
	5	1	0	0	0	0	1	1.0060063	-11.192339	345	1	1.06	0.94;
	6	1	0	0	0	0	1	1.0082256	-10.40833	345	1	1.06	0.94;
	7	1	233.8	84	0	0	1	0.99839728	-12.755626	345	1	1.06	0.94;
	8	1	522	176.6	0	0	1	0.99787232	-13.335844	345	1	1.06	0.94;
	9	1	6.5	-66.6	0	0	1	1.038332	-14.178442	345	1	1.06	0.94;
	10	1	0	0	0	0	1	1.0178431	-8.170875	345	1	1.06	0.94;
	11	1	0	0	0	0	1	1.0133858	-8.9369663	345	1	1.06	0.94;
	12	1	8.53	88	0	0	1	1.000815	-8.9988236	345	1	1.06	0.94;
	13	1	0	0	0	0	1	1.014923	-8.9299272	345	1	1.06	0.94;
	14	1	0	0	0	0	1	1.012319	-10.715295	345	1	1.06	0.94;
	15	1	320	153	0	0	3	1.0161854	-11.345399	345	1	1.06	0.94;
	16	1	329	32.3	0	0	3	1.0325203	-10.033348	345	1	1.06	0.94;
	17	1	0	0	0	0	2	1.0342365	-11.116436	345	1	1.06	0.94;
	18	1	158	30	0	0	2	1.0315726	-11.986168	345	1	1.06	0.94;
	19	1	0	0	0	0	3	1.0501068	-5.4100729	345	1	1.06	0.94;
	20	1	680	103	0	0	3	0.99101054	-6.8211783	345	1	1.06	0.94;
	21	1	274	115	0	0	3	1.0323192	-7.6287461	345	1	1.06	0.94;
	22	1	0	0	0	0	3	1.0501427	-3.1831199	345	1	1.06	0.94;
	23	1	247.5	84.6	0	0	3	1.0451451	-3.3812763	345	1	1.06	0.94;
	24	1	308.6	-92.2	0	0	3	1.038001	-9.9137585	345	1	1.06	0.94;
	25	1	224	47.2	0	0	2	1.0576827	-8.3692354	345	1	1.06	0.94;
	26	1	139	17	0	0	2	1.0525613	-9.4387696	345	1	1.06	0.94;
	27	1	281	75.5	0	0	2	1.0383449	-11.362152	345	1	1.06	0.94;
	28	1	206	27.6	0	0	3	1.0503737	-5.9283592	345	1	1.06	0.94;
	29	1	283.5	26.9	0	0	3	1.0501149	-3.1698741	345	1	1.06	0.94;
	30	2	0	0	0	0	2	1.0499	-7.3704746	345	1	1.06	0.94;
	31	3	9.2	4.6	0	0	1	0.982	0	345	1	1.06	0.94;
	32	2	0	0	0	0	1	0.9841	-0.1884374	345	1	1.06	0.94;
	33	2	0	0	0	0	3	0.9972	-0.19317445	345	1	1.06	0.94;
	34	2	0	0	0	0	3	1.0123	-1.631119	345	1	1.06	0.94;
	35	2	0	0	0	0	3	1.0494	1.7765069	345	1	1.06	0.94;
	36	2	0	0	0	0	3	1.0636	4.4684374	345	1	1.06	0.94;
	37	2	0	0	0	0	2	1.0275	-1.5828988	345	1	1.06	0.94;
	38	2	0	0	0	0	3	1.0265	3.8928177	345	1	1.06	0.94;
	39	2	1104	250	0	0	1	1.03	-14.535256	345	1	1.06	0.94;
];

%% generator data
%	bus	Pg	Qg	Qmax	Qmin	Vg	mBase	status	Pmax	Pmin	Pc1	Pc2	Qc1min	Qc1max	Qc2min	Qc2max	ramp_agc	ramp_10	ramp_30	ramp_q	apf
mpc.gen = [
	30	250	161.762	400	140	1.0499	100	1	1040	0	0	0	0	0	0	0	0	0	0	0	0;
	31	677.871	221.574	300	-100	0.982	100	1	646	0	0	0	0	0	0	0	0	0	0	0	0;
	32	650	206.965	300	150	0.9841	100	1	725	0	0	0	0	0	0	0	0	0	0	0	0;
	33	632	108.293	250	0	0.9972	100	1	652	0	0	0	0	0	0	0	0	0	0	0	0;
	34	508	166.688	167	0	1.0123	100	1	508	0	0	0	0	0	0	0	0	0	0	0	0;
	35	650	210.661	300	-100	1.0494	100	1	687	0	0	0	0	0	0	0	0	0	0	0	0;
	36	560	100.165	240	0	1.0636	100	1	580	0	0	0	0	0	0	0	0	0	0	0	0;
	37	540	-1.36945	250	0	1.0275	100	1	564	0	0	0	0	0	0	0	0	0	0	0	0;
	38	830	21.7327	300	-150	1.0265	100	1	865	0	0	0	0	0	0	0	0	0	0	0	0;
	39	1000	78.4674	300	-100	1.03	100	1	1100	0	0	0	0	0	0	0	0	0	0	0	0;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	2	0.0035	0.0411	0.6987	600	600	600	0	0	1	-360	360;
	1	39	0.001	0.025	0.75	1000	1000	1000	0	0	1	-360	360;
	2	3	0.0013	0.0151	0.2572	500	500	500	0	0	1	-360	360;
	2	25	0.007	0.0086	0.146	500	500	500	0	0	1	-360	360;
	2	30	0	0.0181	0	900	900	2500	1.025	0	1	-360	360;
	3	4	0.0013	0.0213	0.2214	500	500	500	0	0	1	-360	360;
	3	18	0.0011	0.0133	0.2138	500	500	500	0	0	1	-360	360;
	4	5	0.0008	0.0128	0.1342	600	600	600	0	0	1	-360	360;
	4	14	0.0008	0.0129	0.1382	500	500	500	0	0	1	-360	360;
	5	6	0.0002	0.0026	0.0434	1200	1200	1200	0	0	1	-360	360;
	5	8	0.0008	0.0112	0.1476	900	900	900	0	0	1	-360	360;
	6	7	0.0006	0.0092	0.113	900	900	900	0	0	1	-360	360;
	6	11	0.0007	0.0082	0.1389	480	480	480	0	0	1	-360	360;
	6	31	0	0.025	0	1800	1800	1800	1.07	0	1	-360	360;
	7	8	0.0004	0.0046	0.078	900	900	900	0	0	1	-360	360;
	8	9	0.0023	0.0363	0.3804	900	900	900	0	0	1	-360	360;
	9	39	0.001	0.025	1.2	900	900	900	0	0	1	-360	360;
	10	11	0.0004	0.0043	0.0729	600	600	600	0	0	1	-360	360;
	10	13	0.0004	0.0043	0.0729	600	600	600	0	0	1	-360	360;
	10	32	0	0.02	0	900	900	2500	1.07	0	1	-360	360;
	12	11	0.0016	0.0435	0	500	500	500	1.006	0	1	-360	360;
	12	13	0.0016	0.0435	0	500	500	500	1.006	0	1	-360	360;
	13	14	0.0009	0.0101	0.1723	600	600	600	0	0	1	-360	360;
	14	15	0.0018	0.0217	0.366	600	600	600	0	0	1	-360	360;
	15	16	0.0009	0.0094	0.171	600	600	600	0	0	1	-360	360;
	16	17	0.0007	0.0089	0.1342	600	600	600	0	0	1	-360	360;
	16	19	0.0016	0.0195	0.304	600	600	2500	0	0	1	-360	360;
	16	21	0.0008	0.0135	0.2548	600	600	600	0	0	1	-360	360;
	16	24	0.0003	0.0059	0.068	600	600	600	0	0	1	-360	360;
	17	18	0.0007	0.0082	0.1319	600	600	600	0	0	1	-360	360;
	17	27	0.0013	0.0173	0.3216	600	600	600	0	0	1	-360	360;
	19	20	0.0007	0.0138	0	900	900	2500	1.06	0	1	-360	360;
	19	33	0.0007	0.0142	0	900	900	2500	1.07	0	1	-360	360;
	20	34	0.0009	0.018	0	900	900	2500	1.009	0	1	-360	360;
	21	22	0.0008	0.014	0.2565	900	900	900	0	0	1	-360	360;
	22	23	0.0006	0.0096	0.1846	600	600	600	0	0	1	-360	360;
	22	35	0	0.0143	0	900	900	2500	1.025	0	1	-360	360;
	23	24	0.0022	0.035	0.361	600	600	600	0	0	1	-360	360;
	23	36	0.0005	0.0272	0	900	900	2500	1	0	1	-360	360;
	25	26	0.0032	0.0323	0.531	600	600	600	0	0	1	-360	360;
	25	37	0.0006	0.0232	0	900	900	2500	1.025	0	1	-360	360;
	26	27	0.0014	0.0147	0.2396	600	600	600	0	0	1	-360	360;
	26	28	0.0043	0.0474	0.7802	600	600	600	0	0	1	-360	360;
	26	29	0.0057	0.0625	1.029	600	600	600	0	0	1	-360	360;
	28	29	0.0014	0.0151	0.249	600	600	600	0	0	1	-360	360;
	29	38	0.0008	0.0156	0	1200	1200	2500	1.025	0	1	-360	360;
];

%%-----  OPF Data  -----%%
%% generator cost data
%	1	startup	shutdown	n	x1	y1	...	xn	yn
%	2	startup	shutdown	n	c(n-1)	...	c0
mpc.gencost = [
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
	2	0	0	3	0.01	0.3	0.2;
];
)mpc";

inline constexpr std::string_view k_bus57_text = R"mpc(function mpc = case57
%CASE57    Power flow data for IEEE 57 bus test case.
%   Please see CASEFORMAT for details on the case file format.
%   This data was converted from IEEE Common Data Format
%   (ieee57cdf.txt) on 15-Oct-2014 by cdf2matp, rev. 2393
%   See end of file for warnings generated during conversion.
%
%   Converted from IEEE CDF file from:
%       https://labs.ece.uw.edu/pstca/
%
%   Manually modified Qmax, Qmin on generator 1 to 200, -140, respectively.
% 
%  08/25/93 UW ARCHIVE           100.0  1961 W IEEE 57 Bus Test Case

%   MATPOWER

%% MATPOWER Case Format : Version 2
mpc.version = '2';

%%-----  Power Flow Data  -----%%
%% system MVA base
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	3	55	17	0	0	1	1.04	0	0	1	1.06	0.94;
	2	2	3	88	0	0	1	1.01	-1.18	0	1	1.06	0.94;
	3	2	41	21	0	0	1	0.985	-5.97	0	1	1.06	0.94;
	4	1	0	0	0	0	1	0.981	-7.32	0	1	1.06	0.94;
	5	1	13	4	0	0	1	0.976	-8.52	0	1	1.06	0.94;
	6	2	75	2	0	0	1	0.98	-8.65	0	1	1.06	0.94;
	7	1	0	0	0	0	1	0.984	-7.58	0	1	1.06	0.94;
	8	2	150	22	0	0	1	1.005	-4.45	0	1	1.06	0.94;
	9	2	121	26	0	0	1	0.98	-9.56	0	1	1.06	0.94;
	10	1	5	2	0	0	1	0.986	-11.43	0	1	1.06	0.94;
	11	1	0	0	0	0	1	0.974	-10.17	0	1	1.06	0.94;
	12	2	377	24	0	0	1	1.015	-10.46	0	1	1.06	0.94;
	13	1	18	2.3	0	0	1	0.979	-9.79	0	1	1.06	0.94;
	14	1	10.5	5.3	0	0	1	0.97	-9.33	0	1	1.06	0.94;
	15	1	22	5	0	0	1	0.988	-7.18	0	1	1.06	0.94;
	16	1	43	3	0	0	1	1.013	-8.85	0	1	1.06	0.94;
	17	1	42	8	0	0	1	1.017	-5.39	0	1	1.06	0.94;
	18	1	27.2	9.8	0	10	1	1.001	-11.71	0	1	1.06	0.94;
	19	1	3.3	0.6	0	0	1	0.97	-13.2	0	1	1.06	0.94;
	20	1	2.3	1	0	0	1	0.964	-13.41	0	1	1.06	0.94;
	21	1	0	0	0	0	1	1.008	-12.89	0	1	1.06	0.94;
	22	1	0	0	0	0	1	1.01	-12.84	0	1	1.06	0.94;
	23	1	6.3	2.1	0	0	1	1.008	-12.91	0	1	1.06	0.94;
	24	1	0	0	0	0	1	0.999	-13.25	0	1	1.06	0.94;
	25	1	6.3	3.2	0	5.9	1	0.982	-18.13	0	1	1.06	0.94;
	26	1	0	0	0	0	1	0.959	-12.95	0	1	1.06	0.94;
	27	1	9.3	0.5	0	0	1	0.982	-11.48	0	1	1.06	0.94;
	28	1	4.6	2.3	0	0	1	0.997	-10.45	0	1	1.06	0.94;
	29	1	17	2.6	0	0	1	1.01	-9.75	0	1	1.06	0.94;
	30	1	3.6	1.8	0	0	1	0.962	-18.68	0	1	1.06	0.94;
	31	1	5.8	2.9	0	0	1	0.936	-19.34	0	1	1.06	0.94;
	32	1	1.6	0.8	0	0	1	0.949	-18.46	0	1	1.06	0.94;
	33	1	3.8	1.9	0	0	1	0.947	-18.5	0	1	1.06	0.94;
	34	1	0	0	0	0	1	0.959	-14.1	0	1	1.06	0.94;
	35	1	6	3	0	0	1	0.966	-13.86	0	1	1.06	0.94;
	36	1	0	0	0	0	1	0.976	-13.59	0	1	1.06	0.94;
	37	1	0	0	0	0	1	0.985	-13.41	0	1	1.06	0.94;
	38	1	14	7	0	0	1	1.013	-12.71	0	1	1.06	0.94;
	39	1	0	0	0	0	1	0.983	-13.46	0	1	1.06	0.94;
	40	1	0	0	0	0	1	0.973	-13.62	0	1	1.06	0.94;
	41	1	6.3	3	0	0	1	0.996	-14.05	0	1	1.06	0.94;
	42	1	7.1	4.4	0	0	1	0.966	-15.5	0	1	1.06	0.94;
	43	1	2	1	0	0	1	1.01	-11.33	0	1	1.06	0.94;
	44	1	12	1.8	0	0	1	1.017	-11.86	0	1	1.06	0.94;
	45	1	0	0	0	0	1	1.036	-9.25	0	1	1.06	0.94;
	46	1	0	0	0	0	1	1.05	-11.89	0	1	1.06	0.94;
	47	1	29.7	11.6	0	0	1	1.033	-12.49	0	1	1.06	0.94;
	48	1	0	0	0	0	1	1.027	-12.59	0	1	1.06	0.94;
	49	1	18	8.5	0	0	1	1.036	-12.92	0	1	1.06	0.94;
	50	1	21	10.5	0	0	1	1.023	-13.39	0	1	1.06	0.94;
	51	1	18	5.3	0	0	1	1.052	-12.52	0	1	1.06	0.94;
	52	1	4.9	2.2	0	0	1	0.98	-11.47	0	1	1.06	0.94;
	53	1	20	10	0	6.3	1	0.971	-12.23	0	1	1.06	0.94;
	54	1	4.1	1.4	0	0	1	0.996	-11.69	0	1	1.06	0.94;
	55	1	6.8	3.4	0	0	1	1.031	-10.78	0	1	1.06	0.94;
	56	1	7.6	2.2	0	0	1	0.968	-16.04	0	1	1.06	0.94;
	57	1	6.7	2	0	0	1	0.965	-16.56	0	1	1.06	0.94;
];

%% generator data
%	bus	Pg	Qg	Qmax	Qmin	Vg	mBase	status	Pmax	Pmin	Pc1	Pc2	Qc1min	Qc1max	Qc2min	Qc2max	ramp_agc	ramp_10	ramp_30	ramp_q	apf
mpc.gen = [
	1	128.9	-16.1	200	-140	1.04	100	1	575.88	0	0	0	0	0	0	0	0	0	0	0	0;
	2	0	-0.8	50	-17	1.01	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	3	40	-1	60	-10	0.985	100	1	140	0	0	0	0	0	0	0	0	0	0	0	0;
	6	0	0.8	25	-8	0.98	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	8	450	62.1	200	-140	1.005	100	1	550	0	0	0	0	0	0	0	0	0	0	0	0;
	9	0	2.2	9	-3	0.98	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	12	310	128.5	155	-150	1.015	100	1	410	0	0	0	0	0	0	0	0	0	0	0	0;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	2	0.0083	0.028	0.129	0	0	0	0	0	1	-360	360;
	2	3	0.0298	0.085	0.0818	0	0	0	0	0	1	-360	360;
	3	4	0.0112	0.0366	0.038	0	0	0	0	0	1	-360	360;
	4	5	0.0625	0.132	0.0258	0	0	0	0	0	1	-360	360;
	4	6	0.043	0.148	0.0348	0	0	0	0	0	1	-360	360;
	6	7	0.02	0.102	0.0276	0	0	0	0	0	1	-360	360;
	6	8	0.0339	0.173	0.047	0	0	0	0	0	1	-360	360;
	8	9	0.0099	0.0505	0.0548	0	0	0	0	0	1	-360	360;
	9	10	0.0369	0.1679	0.044	0	0	0	0	0	1	-360	360;
	9	11	0.0258	0.0848	0.0218	0	0	0	0	0	1	-360	360;
	9	12	0.0648	0.295	0.0772	0	0	0	0	0	1	-360	360;
	9	13	0.0481	0.158	0.0406	0	0	0	0	0	1	-360	360;
	13	14	0.0132	0.0434	0.011	0	0	0	0	0	1	-360	360;
	13	15	0.0269	0.0869	0.023	0	0	0	0	0	1	-360	360;
	1	15	0.0178	0.091	0.0988	0	0	0	0	0	1	-360	360;
	1	16	0.0454	0.206	0.0546	0	0	0	0	0	1	-360	360;
	1	17	0.0238	0.108	0.0286	0	0	0	0	0	1	-360	360;
	3	15	0.0162	0.053	0.0544	0	0	0	0	0	1	-360	360;
	4	18	0	0.555	0	0	0	0	0.97	0	1	-360	360;
	4	18	0	0.43	0	0	0	0	0.978	0	1	-360	360;
	5	6	0.0302	0.0641	0.0124	0	0	0	0	0	1	-360	360;
	7	8	0.0139	0.0712	0.0194	0	0	0	0	0	1	-360	360;
	10	12	0.0277	0.1262	0.0328	0	0	0	0	0	1	-360	360;
	11	13	0.0223	0.0732	0.0188	0	0	0	0	0	1	-360	360;
	12	13	0.0178	0.058	0.0604	0	0	0	0	0	1	-360	360;
	12	16	0.018	0.0813	0.0216	0	0	0	0	0	1	-360	360;
	12	17	0.0397	0.179	0.0476	0	0	0	0	0	1	-360	360;
	14	15	0.0171	0.0547	0.0148	0	0	0	0	0	1	-360	360;
	18	19	0.461	0.685	0	0	0	0	0	0	1	-360	360;
	19	20	0.283	0.434	0	0	0	0	0	0	1	-360	360;
	21	20	0	0.7767	0	0	0	0	1.043	0	1	-360	360;
	21	22	0.0736	0.117	0	0	0	0	0	0	1	-360	360;
	22	23	0.0099	0.0152	0	0	0	0	0	0	1	-360	360;
	23	24	0.166	0.256	0.0084	0	0	0	0	0	1	-360	360;
	24	25	0	1.182	0	0	0	0	1	0	1	-360	360;
	24	25	0	1.23	0	0	0	0	1	0	1	-360	360;
	24	26	0	0.0473	0	0	0	0	1.043	0	1	-360	360;
	26	27	0.165	0.254	0	0	0	0	0	0	1	-360	360;
	27	28	0.0618	0.0954	0	0	0	0	0	0	1	-360	360;
	28	29	0.0418	0.0587	0	0	0	0	0	0	1	-360	360;
	7	29	0	0.0648	0	0	0	0	0.967	0	1	-360	360;
	25	30	0.135	0.202	0	0	0	0	0	0	1	-360	360;
	30	31	0.326	0.497	0	0	0	0	0	0	1	-360	360;
	31	32	0.507	0.755	0	0	0	0	0	0	1	-360	360;
	32	33	0.0392	0.036	0	0	0	0	0	0	1	-360	360;
	34	32	0	0.953	0	0	0	0	0.975	0	1	-360	360;
	34	35	0.052	0.078	0.0032	0	0	0	0	0	1	-360	360;
	35	36	0.043	0.0537	0.0016	0	0	0	0	0	1	-360	360;
	36	37	0.029	0.0366	0	0	0	0	0	0	1	-360	360;
	37	38	0.0651	0.1009	0.002	0	0	0	0	0	1	-360	360;
	37	39	0.0239	0.0379	0	0	0	0	0	0	1	-360	360;
	36	40	0.03	0.0466	0	0	0	0	0	0	1	-360	360;
	22	38	0.0192	0.0295	0	0	0	0	0	0	1	-360	360;
	11	41	0	0.749	0	0	0	0	0.955	0	1	-360	360;
	41	42	0.207	0.352	0	0	0	0	0	0	1	-360	360;
	41	43	0	0.412	0	0	0	0	0	0	1	-360	360;
	38	44	0.0289	0.0585	0.002	0	0	0	0	0	1	-360	360;
	15	45	0	0.1042	0	0	0	0	0.955	0	1	-360	360;
	14	46	0	0.0735	0	0	0	0	0.9	0	1	-360	360;
	46	47	0.023	0.068	0.0032	0	0	0	0	0	1	-360	360;
	47	48	0.0182	0.0233	0	0	0	0	0	0	1	-360	360;
	48	49	0.0834	0.129	0.0048	0	0	0	0	0	1	-360	360;
	49	50	0.0801	0.128	0	0	0	0	0	0	1	-360	360;
	50	51	0.1386	0.22	0	0	0	0	0	0	1	-360	360;
	10	51	0	0.0712	0	0	0	0	0.93	0	1	-360	360;
	13	49	0	0.191	0	0	0	0	0.895	0	1	-360	360;
	29	52	0.1442	0.187	0	0	0	0	0	0	1	-360	360;
	52	53	0.0762	0.0984	0	0	0	0	0	0	1	-360	360;
	53	54	0.1878	0.232	0	0	0	0	0	0	1	-360	360;
	54	55	0.1732	0.2265	0	0	0	0	0	0	1	-360	360;
	11	43	0	0.153	0	0	0	0	0.958	0	1	-360	360;
	44	45	0.0624	0.1242	0.004	0	0	0	0	0	1	-360	360;
	40	56	0	1.195	0	0	0	0	0.958	0	1	-360	360;
	56	41	0.553	0.549	0	0	0	0	0	0	1	-360	360;
	56	42	0.2125	0.354	0	0	0	0	0	0	1	-360	360;
	39	57	0	1.355	0	0	0	0	0.98	0	1	-360	360;
	57	56	0.174	0.26	0	0	0	0	0	0	1	-360	360;
	38	49	0.115	0.177	0.003	0	0	0	0	0	1	-360	360;
	38	48	0.0312	0.0482	0	0	0	0	0	0	1	-360	360;
	9	55	0	0.1205	0	0	0	0	0.94	0	1	-360	360;
];

%%-----  OPF Data  -----%%
%% generator cost data
%	1	startup	shutdown	n	x1	y1	...	xn	yn
%	2	startup	shutdown	n	c(n-1)	...	c0
mpc.gencost = [
	2	0	0	3	0.077579519	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.25	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0222222222	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0322580645	20	0;
];

%% bus names
mpc.bus_name = {
	'Kanawha   V1';
	'Turner    V1';
	'Logan     V1';
	'Sprigg    V1';
	'Bus 5     V1';
	'Beaver Ck V1';
	'Bus 7     V1';
	'Clinch Rv V1';
	'Saltville V1';
	'Bus 10    V1';
	'Tazewell  V1';
	'Glen Lyn  V1';
	'Bus 13    V1';
	'Bus 14    V1';
	'Bus 15    V1';
	'Bus 16    V1';
	'Bus 17    V1';
	'Sprigg    V2';
	'Bus 19    V2';
	'Bus 20    V2';
	'Bus 21    V3';
	'Bus 22    V3';
	'Bus 23    V3';
	'Bus 24    V3';
	'Bus 25    V4';
	'Bus 26    V5';
	'Bus 27    V5';
	'Bus 28    V5';
	'Bus 29    V5';
	'Bus 30    V4';
	'Bus 31    V4';
	'Bus 32    V4';
	'Bus 33    V4';
	'Bus 34    V3';
	'Bus 35    V3';
	'Bus 36    V3';
	'Bus 37    V3';
	'Bus 38    V3';
	'Bus 39    V3';
	'Bus 40    V3';
	'Tazewell  V6';
	'Bus 42    V6';
	'Tazewell  V7';
	'Bus 44    V3';
	'Bus 45    V3';
	'Bus 46    V3';
	'Bus 47    V3';
	'Bus 48    V3';
	'Bus 49    V3';
	'Bus 50    V3';
	'Bus 51    V3';
	'Bus 52    V5';
	'Bus 53    V5';
	'Bus 54    V5';
	'Saltville V5';
	'Bus 56    V6';
	'Bus 57    V6';
};

% Warnings from cdf2matp conversion:
%
% ***** check the title format in the first line of the cdf file.
% ***** Qmax = Qmin at generator at bus    1 (Qmax set to Qmin + 10)
% ***** Insufficient generation, setting Pmax at slack bus (bus 1) to 575.88
% ***** MVA limit of branch 1 - 2 not given, set to 0
% ***** MVA limit of branch 2 - 3 not given, set to 0
% ***** MVA limit of branch 3 - 4 not given, set to 0
% ***** MVA limit of branch 4 - 5 not given, set to 0
% ***** MVA limit of branch 4 - 6 not given, set to 0
% ***** MVA limit of branch 6 - 7 not given, set to 0
% ***** MVA limit of branch 6 - 8 not given, set to 0
% ***** MVA limit of branch 8 - 9 not given, set to 0
% ***** MVA limit of branch 9 - 10 not given, set to 0
% ***** MVA limit of branch 9 - 11 not given, set to 0
% ***** MVA limit of branch 9 - 12 not given, set to 0
% ***** MVA limit of branch 9 - 13 not given, set to 0
% ***** MVA limit of branch 13 - 14 not given, set to 0
% ***** MVA limit of branch 13 - 15 not given, set to 0
% ***** MVA limit of branch 1 - 15 not given, set to 0
% ***** MVA limit of branch 1 - 16 not given, set to 0
% ***** MVA limit of branch 1 - 17 not given, set to 0
% ***** MVA limit of branch 3 - 15 not given, set to 0
% ***** MVA limit of branch 4 - 18 not given, set to 0
% ***** MVA limit of branch 4 - 18 not given, set to 0
% ***** MVA limit of branch 5 - 6 not given, set to 0
% ***** MVA limit of branch 7 - 8 not given, set to 0
% ***** MVA limit of branch 10 - 12 not given, set to 0
% ***** MVA limit of branch 11 - 13 not given, set to 0
% ***** MVA limit of branch 12 - 13 not given, set to 0
% ***** MVA limit of branch 12 - 16 not given, set to 0
% ***** MVA limit of branch 12 - 17 not given, set to 0
% ***** MVA limit of branch 14 - 15 not given, set to 0
% ***** MVA limit of branch 18 - 19 not given, set to 0
% ***** MVA limit of branch 19 - 20 not given, set to 0
% ***** MVA limit of branch 21 - 20 not given, set to 0
% ***** MVA limit of branch 21 - 22 not given, set to 0
% ***** MVA limit of branch 22 - 23 not given, set to 0
% ***** MVA limit of branch 23 - 24 not given, set to 0
% ***** MVA limit of branch 24 - 25 not given, set to 0
% ***** MVA limit of branch 24 - 25 not given, set to 0
% ***** MVA limit of branch 24 - 26 not given, set to 0
% ***** MVA limit of branch 26 - 27 not given, set to 0
% ***** MVA limit of branch 27 - 28 not given, set to 0
% ***** MVA limit of branch 28 - 29 not given, set to 0
% ***** MVA limit of branch 7 - 29 not given, set to 0
% ***** MVA limit of branch 25 - 30 not given, set to 0
% ***** MVA limit of branch 30 - 31 not given, set to 0
% ***** MVA limit of branch 31 - 32 not given, set to 0
% ***** MVA limit of branch 32 - 33 not given, set to 0
% ***** MVA limit of branch 34 - 32 not given, set to 0
% ***** MVA limit of branch 34 - 35 not given, set to 0
% ***** MVA limit of branch 35 - 36 not given, set to 0
% ***** MVA limit of branch 36 - 37 not given, set to 0
% ***** MVA limit of branch 37 - 38 not given, set to 0
% ***** MVA limit of branch 37 - 39 not given, set to 0
% ***** MVA limit of branch 36 - 40 not given, set to 0
% ***** MVA limit of branch 22 - 38 not given, set to 0
% ***** MVA limit of branch 11 - 41 not given, set to 0
% ***** MVA limit of branch 41 - 42 not given, set to 0
% ***** MVA limit of branch 41 - 43 not given, set to 0
% ***** MVA limit of branch 38 - 44 not given, set to 0
% ***** MVA limit of branch 15 - 45 not given, set to 0
% ***** MVA limit of branch 14 - 46 not given, set to 0
% ***** MVA limit of branch 46 - 47 not given, set to 0
% ***** MVA limit of branch 47 - 48 not given, set to 0
% ***** MVA limit of branch 48 - 49 not given, set to 0
% ***** MVA limit of branch 49 - 50 not given, set to 0
% ***** MVA limit of branch 50 - 51 not given, set to 0
% ***** MVA limit of branch 10 - 51 not given, set to 0
% ***** MVA limit of branch 13 - 49 not given, set to 0
% ***** MVA limit of branch 29 - 52 not given, set to 0
% ***** MVA limit of branch 52 - 53 not given, set to 0
% ***** MVA limit of branch 53 - 54 not given, set to 0
% ***** MVA limit of branch 54 - 55 not given, set to 0
% ***** MVA limit of branch 11 - 43 not given, set to 0
% ***** MVA limit of branch 44 - 45 not given, set to 0
% ***** MVA limit of branch 40 - 56 not given, set to 0
% ***** MVA limit of branch 56 - 41 not given, set to 0
% ***** MVA limit of branch 56 - 42 not given, set to 0
% ***** MVA limit of branch 39 - 57 not given, set to 0
% ***** MVA limit of branch 57 - 56 not given, set to 0
% ***** MVA limit of branch 38 - 49 not given, set to 0
% ***** MVA limit of branch 38 - 48 not given, set to 0
% ***** MVA limit of branch 9 - 55 not given, set to 0
)mpc";

inline constexpr std::string_view k_bus118_text = R"mpc(function mpc = case118
%CASE118    Power flow data for IEEE 118 bus test case.
%   Please see CASEFORMAT for details on the case file format.
%   This data was converted from IEEE Common Data Format
%   (ieee118cdf.txt) on 15-Oct-2014 by cdf2matp, rev. 2393
%   See end of file for warnings generated during conversion.
%
%   Converted from IEEE CDF file from:
%       https://labs.ece.uw.edu/pstca/
%   With baseKV data take from the PSAP format file from the same site,
%   added manually on 10-Mar-2006.
%   Branches 86--87, 68--116 changed from transmission lines (tap ratio = 0)
%   to transformers (tap ratio = 1) for consistency with bus base voltages
%   on 2019-02-15.
% 
%   08/25/93 UW ARCHIVE           100.0  1961 W IEEE 118 Bus Test Case

%   MATPOWER

%% MATPOWER Case Format : Version 2
mpc.version = '2';

%%-----  Power Flow Data  -----%%
%% system MVA base
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	2	51	27	0	0	1	0.955	10.67	138	1	1.06	0.94;
	2	1	20	9	0	0	1	0.971	11.22	138	1	1.06	0.94;
	3	1	39	10	0	0	1	0.968	11.56	138	1	1.06	0.94;
	4	2	39	12	0	0	1	0.998	15.28	138	1	1.06	0.94;
	5	1	0	0	0	-40	1	1.002	15.73	138	1	1.06	0.94;
	6	2	52	22	0	0	1	0.99	13	138	1	1.06	0.94;
	7	1	19	2	0	0	1	0.989	12.56	138	1	1.06	0.94;
	8	2	28	0	0	0	1	1.015	20.77	345	1	1.06	0.94;
	9	1	0	0	0	0	1	1.043	28.02	345	1	1.06	0.94;
	10	2	0	0	0	0	1	1.05	35.61	345	1	1.06	0.94;
	11	1	70	23	0	0	1	0.985	12.72	138	1	1.06	0.94;
	12	2	47	10	0	0	1	0.99	12.2	138	1	1.06	0.94;
	13	1	34	16	0	0	1	0.968	11.35	138	1	1.06	0.94;
	14	1	14	1	0	0	1	0.984	11.5	138	1	1.06	0.94;
	15	2	90	30	0	0	1	0.97	11.23	138	1	1.06	0.94;
	16	1	25	10	0	0	1	0.984	11.91	138	1	1.06	0.94;
	17	1	11	3	0	0	1	0.995	13.74	138	1	1.06	0.94;
	18	2	60	34	0	0	1	0.973	11.53	138	1	1.06	0.94;
	19	2	45	25	0	0	1	0.963	11.05	138	1	1.06	0.94;
	20	1	18	3	0	0	1	0.958	11.93	138	1	1.06	0.94;
	21	1	14	8	0	0	1	0.959	13.52	138	1	1.06	0.94;
	22	1	10	5	0	0	1	0.97	16.08	138	1	1.06	0.94;
	23	1	7	3	0	0	1	1	21	138	1	1.06	0.94;
	24	2	13	0	0	0	1	0.992	20.89	138	1	1.06	0.94;
	25	2	0	0	0	0	1	1.05	27.93	138	1	1.06	0.94;
	26	2	0	0	0	0	1	1.015	29.71	345	1	1.06	0.94;
	27	2	71	13	0	0	1	0.968	15.35	138	1	1.06	0.94;
	28	1	17	7	0	0	1	0.962	13.62	138	1	1.06	0.94;
	29	1	24	4	0	0	1	0.963	12.63	138	1	1.06	0.94;
	30	1	0	0	0	0	1	0.968	18.79	345	1	1.06	0.94;
	31	2	43	27	0	0	1	0.967	12.75	138	1	1.06	0.94;
	32	2	59	23	0	0	1	0.964	14.8	138	1	1.06	0.94;
	33	1	23	9	0	0	1	0.972	10.63	138	1	1.06	0.94;
	34	2	59	26	0	14	1	0.986	11.3	138	1	1.06	0.94;
	35	1	33	9	0	0	1	0.981	10.87	138	1	1.06	0.94;
	36	2	31	17	0	0	1	0.98	10.87	138	1	1.06	0.94;
	37	1	0	0	0	-25	1	0.992	11.77	138	1	1.06	0.94;
	38	1	0	0	0	0	1	0.962	16.91	345	1	1.06	0.94;
	39	1	27	11	0	0	1	0.97	8.41	138	1	1.06	0.94;
	40	2	66	23	0	0	1	0.97	7.35	138	1	1.06	0.94;
	41	1	37	10	0	0	1	0.967	6.92	138	1	1.06	0.94;
	42	2	96	23	0	0	1	0.985	8.53	138	1	1.06	0.94;
	43	1	18	7	0	0	1	0.978	11.28	138	1	1.06	0.94;
	44	1	16	8	0	10	1	0.985	13.82	138	1	1.06	0.94;
	45	1	53	22	0	10	1	0.987	15.67	138	1	1.06	0.94;
	46	2	28	10	0	10	1	1.005	18.49	138	1	1.06	0.94;
	47	1	34	0	0	0	1	1.017	20.73	138	1	1.06	0.94;
	48	1	20	11	0	15	1	1.021	19.93	138	1	1.06	0.94;
	49	2	87	30	0	0	1	1.025	20.94	138	1	1.06	0.94;
	50	1	17	4	0	0	1	1.001	18.9	138	1	1.06	0.94;
	51	1	17	8	0	0	1	0.967	16.28	138	1	1.06	0.94;
	52	1	18	5	0	0	1	0.957	15.32	138	1	1.06	0.94;
	53	1	23	11	0	0	1	0.946	14.35	138	1	1.06	0.94;
	54	2	113	32	0	0	1	0.955	15.26	138	1	1.06	0.94;
	55	2	63	22	0	0	1	0.952	14.97	138	1	1.06	0.94;
	56	2	84	18	0	0	1	0.954	15.16	138	1	1.06	0.94;
	57	1	12	3	0	0	1	0.971	16.36	138	1	1.06	0.94;
	58	1	12	3	0	0	1	0.959	15.51	138	1	1.06	0.94;
	59	2	277	113	0	0	1	0.985	19.37	138	1	1.06	0.94;
	60	1	78	3	0	0	1	0.993	23.15	138	1	1.06	0.94;
	61	2	0	0	0	0	1	0.995	24.04	138	1	1.06	0.94;
	62	2	77	14	0	0	1	0.998	23.43	138	1	1.06	0.94;
	63	1	0	0	0	0	1	0.969	22.75	345	1	1.06	0.94;
	64	1	0	0	0	0	1	0.984	24.52	345	1	1.06	0.94;
	65	2	0	0	0	0	1	1.005	27.65	345	1	1.06	0.94;
	66	2	39	18	0	0	1	1.05	27.48	138	1	1.06	0.94;
	67	1	28	7	0	0	1	1.02	24.84	138	1	1.06	0.94;
	68	1	0	0	0	0	1	1.003	27.55	345	1	1.06	0.94;
	69	3	0	0	0	0	1	1.035	30	138	1	1.06	0.94;
	70	2	66	20	0	0	1	0.984	22.58	138	1	1.06	0.94;
	71	1	0	0	0	0	1	0.987	22.15	138	1	1.06	0.94;
	72	2	12	0	0	0	1	0.98	20.98	138	1	1.06	0.94;
	73	2	6	0	0	0	1	0.991	21.94	138	1	1.06	0.94;
	74	2	68	27	0	12	1	0.958	21.64	138	1	1.06	0.94;
	75	1	47	11	0	0	1	0.967	22.91	138	1	1.06	0.94;
	76	2	68	36	0	0	1	0.943	21.77	138	1	1.06	0.94;
	77	2	61	28	0	0	1	1.006	26.72	138	1	1.06	0.94;
	78	1	71	26	0	0	1	1.003	26.42	138	1	1.06	0.94;
	79	1	39	32	0	20	1	1.009	26.72	138	1	1.06	0.94;
	80	2	130	26	0	0	1	1.04	28.96	138	1	1.06	0.94;
	81	1	0	0	0	0	1	0.997	28.1	345	1	1.06	0.94;
	82	1	54	27	0	20	1	0.989	27.24	138	1	1.06	0.94;
	83	1	20	10	0	10	1	0.985	28.42	138	1	1.06	0.94;
	84	1	11	7	0	0	1	0.98	30.95	138	1	1.06	0.94;
	85	2	24	15	0	0	1	0.985	32.51	138	1	1.06	0.94;
	86	1	21	10	0	0	1	0.987	31.14	138	1	1.06	0.94;
	87	2	0	0	0	0	1	1.015	31.4	161	1	1.06	0.94;
	88	1	48	10	0	0	1	0.987	35.64	138	1	1.06	0.94;
	89	2	0	0	0	0	1	1.005	39.69	138	1	1.06	0.94;
	90	2	163	42	0	0	1	0.985	33.29	138	1	1.06	0.94;
	91	2	10	0	0	0	1	0.98	33.31	138	1	1.06	0.94;
	92	2	65	10	0	0	1	0.993	33.8	138	1	1.06	0.94;
	93	1	12	7	0	0	1	0.987	30.79	138	1	1.06	0.94;
	94	1	30	16	0	0	1	0.991	28.64	138	1	1.06	0.94;
	95	1	42	31	0	0	1	0.981	27.67	138	1	1.06	0.94;
	96	1	38	15	0	0	1	0.993	27.51	138	1	1.06	0.94;
	97	1	15	9	0	0	1	1.011	27.88	138	1	1.06	0.94;
	98	1	34	8	0	0	1	1.024	27.4	138	1	1.06	0.94;
	99	2	42	0	0	0	1	1.01	27.04	138	1	1.06	0.94;
	100	2	37	18	0	0	1	1.017	28.03	138	1	1.06	0.94;
	101	1	22	15	0	0	1	0.993	29.61	138	1	1.06	0.94;
	102	1	5	3	0	0	1	0.991	32.3	138	1	1.06	0.94;
	103	2	23	16	0	0	1	1.001	24.44	138	1	1.06	0.94;
	104	2	38	25	0	0	1	0.971	21.69	138	1	1.06	0.94;
	105	2	31	26	0	20	1	0.965	20.57	138	1	1.06	0.94;
	106	1	43	16	0	0	1	0.962	20.32	138	1	1.06	0.94;
	107	2	50	12	0	6	1	0.952	17.53	138	1	1.06	0.94;
	108	1	2	1	0	0	1	0.967	19.38	138	1	1.06	0.94;
	109	1	8	3	0	0	1	0.967	18.93	138	1	1.06	0.94;
	110	2	39	30	0	6	1	0.973	18.09	138	1	1.06	0.94;
	111	2	0	0	0	0	1	0.98	19.74	138	1	1.06	0.94;
	112	2	68	13	0	0	1	0.975	14.99	138	1	1.06	0.94;
	113	2	6	0	0	0	1	0.993	13.74	138	1	1.06	0.94;
	114	1	8	3	0	0	1	0.96	14.46	138	1	1.06	0.94;
	115	1	22	7	0	0	1	0.96	14.46	138	1	1.06	0.94;
	116	2	184	0	0	0	1	1.005	27.12	138	1	1.06	0.94;
	117	1	20	8	0	0	1	0.974	10.67	138	1	1.06	0.94;
	118	1	33	15	0	0	1	0.949	21.92	138	1	1.06	0.94;
];

%% generator data
%	bus	Pg	Qg	Qmax	Qmin	Vg	mBase	status	Pmax	Pmin	Pc1	Pc2	Qc1min	Qc1max	Qc2min	Qc2max	ramp_agc	ramp_10	ramp_30	ramp_q	apf
mpc.gen = [
	1	0	0	15	-5	0.955	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	4	0	0	300	-300	0.998	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	6	0	0	50	-13	0.99	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	8	0	0	300	-300	1.015	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	10	450	0	200	-147	1.05	100	1	550	0	0	0	0	0	0	0	0	0	0	0	0;
	12	85	0	120	-35	0.99	100	1	185	0	0	0	0	0	0	0	0	0	0	0	0;
	15	0	0	30	-10	0.97	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	18	0	0	50	-16	0.973	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	19	0	0	24	-8	0.962	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	24	0	0	300	-300	0.992	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	25	220	0	140	-47	1.05	100	1	320	0	0	0	0	0	0	0	0	0	0	0	0;
	26	314	0	1000	-1000	1.015	100	1	414	0	0	0	0	0	0	0	0	0	0	0	0;
	27	0	0	300	-300	0.968	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	31	7	0	300	-300	0.967	100	1	107	0	0	0	0	0	0	0	0	0	0	0	0;
	32	0	0	42	-14	0.963	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	34	0	0	24	-8	0.984	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	36	0	0	24	-8	0.98	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	40	0	0	300	-300	0.97	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	42	0	0	300	-300	0.985	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	46	19	0	100	-100	1.005	100	1	119	0	0	0	0	0	0	0	0	0	0	0	0;
	49	204	0	210	-85	1.025	100	1	304	0	0	0	0	0	0	0	0	0	0	0	0;
	54	48	0	300	-300	0.955	100	1	148	0	0	0	0	0	0	0	0	0	0	0	0;
	55	0	0	23	-8	0.952	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	56	0	0	15	-8	0.954	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	59	155	0	180	-60	0.985	100	1	255	0	0	0	0	0	0	0	0	0	0	0	0;
	61	160	0	300	-100	0.995	100	1	260	0	0	0	0	0	0	0	0	0	0	0	0;
	62	0	0	20	-20	0.998	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	65	391	0	200	-67	1.005	100	1	491	0	0	0	0	0	0	0	0	0	0	0	0;
	66	392	0	200	-67	1.05	100	1	492	0	0	0	0	0	0	0	0	0	0	0	0;
	69	516.4	0	300	-300	1.035	100	1	805.2	0	0	0	0	0	0	0	0	0	0	0	0;
	70	0	0	32	-10	0.984	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	72	0	0	100	-100	0.98	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	73	0	0	100	-100	0.991	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	74	0	0	9	-6	0.958	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	76	0	0	23	-8	0.943	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	77	0	0	70	-20	1.006	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	80	477	0	280	-165	1.04	100	1	577	0	0	0	0	0	0	0	0	0	0	0	0;
	85	0	0	23	-8	0.985	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	87	4	0	1000	-100	1.015	100	1	104	0	0	0	0	0	0	0	0	0	0	0	0;
	89	607	0	300	-210	1.005	100	1	707	0	0	0	0	0	0	0	0	0	0	0	0;
	90	0	0	300	-300	0.985	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	91	0	0	100	-100	0.98	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	92	0	0	9	-3	0.99	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	99	0	0	100	-100	1.01	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	100	252	0	155	-50	1.017	100	1	352	0	0	0	0	0	0	0	0	0	0	0	0;
	103	40	0	40	-15	1.01	100	1	140	0	0	0	0	0	0	0	0	0	0	0	0;
	104	0	0	23	-8	0.971	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	105	0	0	23	-8	0.965	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	107	0	0	200	-200	0.952	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	110	0	0	23	-8	0.973	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	111	36	0	1000	-100	0.98	100	1	136	0	0	0	0	0	0	0	0	0	0	0	0;
	112	0	0	1000	-100	0.975	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	113	0	0	200	-100	0.993	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
	116	0	0	1000	-1000	1.005	100	1	100	0	0	0	0	0	0	0	0	0	0	0	0;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	2	0.0303	0.0999	0.0254	0	0	0	0	0	1	-360	360;
	1	3	0.0129	0.0424	0.01082	0	0	0	0	0	1	-360	360;
	4	5	0.00176	0.00798	0.0021	0	0	0	0	0	1	-360	360;
	3	5	0.0241	0.108	0.0284	0	0	0	0	0	1	-360	360;
	5	6	0.0119	0.054	0.01426	0	0	0	0	0	1	-360	360;
	6	7	0.00459	0.0208	0.0055	0	0	0	0	0	1	-360	360;
	8	9	0.00244	0.0305	1.162	0	0	0	0	0	1	-360	360;
	8	5	0	0.0267	0	0	0	0	0.985	0	1	-360	360;
	9	10	0.00258	0.0322	1.23	0	0	0	0	0	1	-360	360;
	4	11	0.0209	0.0688	0.01748	0	0	0	0	0	1	-360	360;
	5	11	0.0203	0.0682	0.01738	0	0	0	0	0	1	-360	360;
	11	12	0.00595	0.0196	0.00502	0	0	0	0	0	1	-360	360;
	2	12	0.0187	0.0616	0.01572	0	0	0	0	0	1	-360	360;
	3	12	0.0484	0.16	0.0406	0	0	0	0	0	1	-360	360;
	7	12	0.00862	0.034	0.00874	0	0	0	0	0	1	-360	360;
	11	13	0.02225	0.0731	0.01876	0	0	0	0	0	1	-360	360;
	12	14	0.0215	0.0707	0.01816	0	0	0	0	0	1	-360	360;
	13	15	0.0744	0.2444	0.06268	0	0	0	0	0	1	-360	360;
	14	15	0.0595	0.195	0.0502	0	0	0	0	0	1	-360	360;
	12	16	0.0212	0.0834	0.0214	0	0	0	0	0	1	-360	360;
	15	17	0.0132	0.0437	0.0444	0	0	0	0	0	1	-360	360;
	16	17	0.0454	0.1801	0.0466	0	0	0	0	0	1	-360	360;
	17	18	0.0123	0.0505	0.01298	0	0	0	0	0	1	-360	360;
	18	19	0.01119	0.0493	0.01142	0	0	0	0	0	1	-360	360;
	19	20	0.0252	0.117	0.0298	0	0	0	0	0	1	-360	360;
	15	19	0.012	0.0394	0.0101	0	0	0	0	0	1	-360	360;
	20	21	0.0183	0.0849	0.0216	0	0	0	0	0	1	-360	360;
	21	22	0.0209	0.097	0.0246	0	0	0	0	0	1	-360	360;
	22	23	0.0342	0.159	0.0404	0	0	0	0	0	1	-360	360;
	23	24	0.0135	0.0492	0.0498	0	0	0	0	0	1	-360	360;
	23	25	0.0156	0.08	0.0864	0	0	0	0	0	1	-360	360;
	26	25	0	0.0382	0	0	0	0	0.96	0	1	-360	360;
	25	27	0.0318	0.163	0.1764	0	0	0	0	0	1	-360	360;
	27	28	0.01913	0.0855	0.0216	0	0	0	0	0	1	-360	360;
	28	29	0.0237	0.0943	0.0238	0	0	0	0	0	1	-360	360;
	30	17	0	0.0388	0	0	0	0	0.96	0	1	-360	360;
	8	30	0.00431	0.0504	0.514	0	0	0	0	0	1	-360	360;
	26	30	0.00799	0.086	0.908	0	0	0	0	0	1	-360	360;
	17	31	0.0474	0.1563	0.0399	0	0	0	0	0	1	-360	360;
	29	31	0.0108	0.0331	0.0083	0	0	0	0	0	1	-360	360;
	23	32	0.0317	0.1153	0.1173	0	0	0	0	0	1	-360	360;
	31	32	0.0298	0.0985	0.0251	0	0	0	0	0	1	-360	360;
	27	32	0.0229	0.0755	0.01926	0	0	0	0	0	1	-360	360;
	15	33	0.038	0.1244	0.03194	0	0	0	0	0	1	-360	360;
	19	34	0.0752	0.247	0.0632	0	0	0	0	0	1	-360	360;
	35	36	0.00224	0.0102	0.00268	0	0	0	0	0	1	-360	360;
	35	37	0.011	0.0497	0.01318	0	0	0	0	0	1	-360	360;
	33	37	0.0415	0.142	0.0366	0	0	0	0	0	1	-360	360;
	34	36	0.00871	0.0268	0.00568	0	0	0	0	0	1	-360	360;
	34	37	0.00256	0.0094	0.00984	0	0	0	0	0	1	-360	360;
	38	37	0	0.0375	0	0	0	0	0.935	0	1	-360	360;
	37	39	0.0321	0.106	0.027	0	0	0	0	0	1	-360	360;
	37	40	0.0593	0.168	0.042	0	0	0	0	0	1	-360	360;
	30	38	0.00464	0.054	0.422	0	0	0	0	0	1	-360	360;
	39	40	0.0184	0.0605	0.01552	0	0	0	0	0	1	-360	360;
	40	41	0.0145	0.0487	0.01222	0	0	0	0	0	1	-360	360;
	40	42	0.0555	0.183	0.0466	0	0	0	0	0	1	-360	360;
	41	42	0.041	0.135	0.0344	0	0	0	0	0	1	-360	360;
	43	44	0.0608	0.2454	0.06068	0	0	0	0	0	1	-360	360;
	34	43	0.0413	0.1681	0.04226	0	0	0	0	0	1	-360	360;
	44	45	0.0224	0.0901	0.0224	0	0	0	0	0	1	-360	360;
	45	46	0.04	0.1356	0.0332	0	0	0	0	0	1	-360	360;
	46	47	0.038	0.127	0.0316	0	0	0	0	0	1	-360	360;
	46	48	0.0601	0.189	0.0472	0	0	0	0	0	1	-360	360;
	47	49	0.0191	0.0625	0.01604	0	0	0	0	0	1	-360	360;
	42	49	0.0715	0.323	0.086	0	0	0	0	0	1	-360	360;
	42	49	0.0715	0.323	0.086	0	0	0	0	0	1	-360	360;
	45	49	0.0684	0.186	0.0444	0	0	0	0	0	1	-360	360;
	48	49	0.0179	0.0505	0.01258	0	0	0	0	0	1	-360	360;
	49	50	0.0267	0.0752	0.01874	0	0	0	0	0	1	-360	360;
	49	51	0.0486	0.137	0.0342	0	0	0	0	0	1	-360	360;
	51	52	0.0203	0.0588	0.01396	0	0	0	0	0	1	-360	360;
	52	53	0.0405	0.1635	0.04058	0	0	0	0	0	1	-360	360;
	53	54	0.0263	0.122	0.031	0	0	0	0	0	1	-360	360;
	49	54	0.073	0.289	0.0738	0	0	0	0	0	1	-360	360;
	49	54	0.0869	0.291	0.073	0	0	0	0	0	1	-360	360;
	54	55	0.0169	0.0707	0.0202	0	0	0	0	0	1	-360	360;
	54	56	0.00275	0.00955	0.00732	0	0	0	0	0	1	-360	360;
	55	56	0.00488	0.0151	0.00374	0	0	0	0	0	1	-360	360;
	56	57	0.0343	0.0966	0.0242	0	0	0	0	0	1	-360	360;
	50	57	0.0474	0.134	0.0332	0	0	0	0	0	1	-360	360;
	56	58	0.0343	0.0966	0.0242	0	0	0	0	0	1	-360	360;
	51	58	0.0255	0.0719	0.01788	0	0	0	0	0	1	-360	360;
	54	59	0.0503	0.2293	0.0598	0	0	0	0	0	1	-360	360;
	56	59	0.0825	0.251	0.0569	0	0	0	0	0	1	-360	360;
	56	59	0.0803	0.239	0.0536	0	0	0	0	0	1	-360	360;
	55	59	0.04739	0.2158	0.05646	0	0	0	0	0	1	-360	360;
	59	60	0.0317	0.145	0.0376	0	0	0	0	0	1	-360	360;
	59	61	0.0328	0.15	0.0388	0	0	0	0	0	1	-360	360;
	60	61	0.00264	0.0135	0.01456	0	0	0	0	0	1	-360	360;
	60	62	0.0123	0.0561	0.01468	0	0	0	0	0	1	-360	360;
	61	62	0.00824	0.0376	0.0098	0	0	0	0	0	1	-360	360;
	63	59	0	0.0386	0	0	0	0	0.96	0	1	-360	360;
	63	64	0.00172	0.02	0.216	0	0	0	0	0	1	-360	360;
	64	61	0	0.0268	0	0	0	0	0.985	0	1	-360	360;
	38	65	0.00901	0.0986	1.046	0	0	0	0	0	1	-360	360;
	64	65	0.00269	0.0302	0.38	0	0	0	0	0	1	-360	360;
	49	66	0.018	0.0919	0.0248	0	0	0	0	0	1	-360	360;
	49	66	0.018	0.0919	0.0248	0	0	0	0	0	1	-360	360;
	62	66	0.0482	0.218	0.0578	0	0	0	0	0	1	-360	360;
	62	67	0.0258	0.117	0.031	0	0	0	0	0	1	-360	360;
	65	66	0	0.037	0	0	0	0	0.935	0	1	-360	360;
	66	67	0.0224	0.1015	0.02682	0	0	0	0	0	1	-360	360;
	65	68	0.00138	0.016	0.638	0	0	0	0	0	1	-360	360;
	47	69	0.0844	0.2778	0.07092	0	0	0	0	0	1	-360	360;
	49	69	0.0985	0.324	0.0828	0	0	0	0	0	1	-360	360;
	68	69	0	0.037	0	0	0	0	0.935	0	1	-360	360;
	69	70	0.03	0.127	0.122	0	0	0	0	0	1	-360	360;
	24	70	0.00221	0.4115	0.10198	0	0	0	0	0	1	-360	360;
	70	71	0.00882	0.0355	0.00878	0	0	0	0	0	1	-360	360;
	24	72	0.0488	0.196	0.0488	0	0	0	0	0	1	-360	360;
	71	72	0.0446	0.18	0.04444	0	0	0	0	0	1	-360	360;
	71	73	0.00866	0.0454	0.01178	0	0	0	0	0	1	-360	360;
	70	74	0.0401	0.1323	0.03368	0	0	0	0	0	1	-360	360;
	70	75	0.0428	0.141	0.036	0	0	0	0	0	1	-360	360;
	69	75	0.0405	0.122	0.124	0	0	0	0	0	1	-360	360;
	74	75	0.0123	0.0406	0.01034	0	0	0	0	0	1	-360	360;
	76	77	0.0444	0.148	0.0368	0	0	0	0	0	1	-360	360;
	69	77	0.0309	0.101	0.1038	0	0	0	0	0	1	-360	360;
	75	77	0.0601	0.1999	0.04978	0	0	0	0	0	1	-360	360;
	77	78	0.00376	0.0124	0.01264	0	0	0	0	0	1	-360	360;
	78	79	0.00546	0.0244	0.00648	0	0	0	0	0	1	-360	360;
	77	80	0.017	0.0485	0.0472	0	0	0	0	0	1	-360	360;
	77	80	0.0294	0.105	0.0228	0	0	0	0	0	1	-360	360;
	79	80	0.0156	0.0704	0.0187	0	0	0	0	0	1	-360	360;
	68	81	0.00175	0.0202	0.808	0	0	0	0	0	1	-360	360;
	81	80	0	0.037	0	0	0	0	0.935	0	1	-360	360;
	77	82	0.0298	0.0853	0.08174	0	0	0	0	0	1	-360	360;
	82	83	0.0112	0.03665	0.03796	0	0	0	0	0	1	-360	360;
	83	84	0.0625	0.132	0.0258	0	0	0	0	0	1	-360	360;
	83	85	0.043	0.148	0.0348	0	0	0	0	0	1	-360	360;
	84	85	0.0302	0.0641	0.01234	0	0	0	0	0	1	-360	360;
	85	86	0.035	0.123	0.0276	0	0	0	0	0	1	-360	360;
	86	87	0.02828	0.2074	0.0445	0	0	0	1	0	1	-360	360;
	85	88	0.02	0.102	0.0276	0	0	0	0	0	1	-360	360;
	85	89	0.0239	0.173	0.047	0	0	0	0	0	1	-360	360;
	88	89	0.0139	0.0712	0.01934	0	0	0	0	0	1	-360	360;
	89	90	0.0518	0.188	0.0528	0	0	0	0	0	1	-360	360;
	89	90	0.0238	0.0997	0.106	0	0	0	0	0	1	-360	360;
	90	91	0.0254	0.0836	0.0214	0	0	0	0	0	1	-360	360;
	89	92	0.0099	0.0505	0.0548	0	0	0	0	0	1	-360	360;
	89	92	0.0393	0.1581	0.0414	0	0	0	0	0	1	-360	360;
	91	92	0.0387	0.1272	0.03268	0	0	0	0	0	1	-360	360;
	92	93	0.0258	0.0848	0.0218	0	0	0	0	0	1	-360	360;
	92	94	0.0481	0.158	0.0406	0	0	0	0	0	1	-360	360;
	93	94	0.0223	0.0732	0.01876	0	0	0	0	0	1	-360	360;
	94	95	0.0132	0.0434	0.0111	0	0	0	0	0	1	-360	360;
	80	96	0.0356	0.182	0.0494	0	0	0	0	0	1	-360	360;
	82	96	0.0162	0.053	0.0544	0	0	0	0	0	1	-360	360;
	94	96	0.0269	0.0869	0.023	0	0	0	0	0	1	-360	360;
	80	97	0.0183	0.0934	0.0254	0	0	0	0	0	1	-360	360;
	80	98	0.0238	0.108	0.0286	0	0	0	0	0	1	-360	360;
	80	99	0.0454	0.206	0.0546	0	0	0	0	0	1	-360	360;
	92	100	0.0648	0.295	0.0472	0	0	0	0	0	1	-360	360;
	94	100	0.0178	0.058	0.0604	0	0	0	0	0	1	-360	360;
	95	96	0.0171	0.0547	0.01474	0	0	0	0	0	1	-360	360;
	96	97	0.0173	0.0885	0.024	0	0	0	0	0	1	-360	360;
	98	100	0.0397	0.179	0.0476	0	0	0	0	0	1	-360	360;
	99	100	0.018	0.0813	0.0216	0	0	0	0	0	1	-360	360;
	100	101	0.0277	0.1262	0.0328	0	0	0	0	0	1	-360	360;
	92	102	0.0123	0.0559	0.01464	0	0	0	0	0	1	-360	360;
	101	102	0.0246	0.112	0.0294	0	0	0	0	0	1	-360	360;
	100	103	0.016	0.0525	0.0536	0	0	0	0	0	1	-360	360;
	100	104	0.0451	0.204	0.0541	0	0	0	0	0	1	-360	360;
	103	104	0.0466	0.1584	0.0407	0	0	0	0	0	1	-360	360;
	103	105	0.0535	0.1625	0.0408	0	0	0	0	0	1	-360	360;
	100	106	0.0605	0.229	0.062	0	0	0	0	0	1	-360	360;
	104	105	0.00994	0.0378	0.00986	0	0	0	0	0	1	-360	360;
	105	106	0.014	0.0547	0.01434	0	0	0	0	0	1	-360	360;
	105	107	0.053	0.183	0.0472	0	0	0	0	0	1	-360	360;
	105	108	0.0261	0.0703	0.01844	0	0	0	0	0	1	-360	360;
	106	107	0.053	0.183	0.0472	0	0	0	0	0	1	-360	360;
	108	109	0.0105	0.0288	0.0076	0	0	0	0	0	1	-360	360;
	103	110	0.03906	0.1813	0.0461	0	0	0	0	0	1	-360	360;
	109	110	0.0278	0.0762	0.0202	0	0	0	0	0	1	-360	360;
	110	111	0.022	0.0755	0.02	0	0	0	0	0	1	-360	360;
	110	112	0.0247	0.064	0.062	0	0	0	0	0	1	-360	360;
	17	113	0.00913	0.0301	0.00768	0	0	0	0	0	1	-360	360;
	32	113	0.0615	0.203	0.0518	0	0	0	0	0	1	-360	360;
	32	114	0.0135	0.0612	0.01628	0	0	0	0	0	1	-360	360;
	27	115	0.0164	0.0741	0.01972	0	0	0	0	0	1	-360	360;
	114	115	0.0023	0.0104	0.00276	0	0	0	0	0	1	-360	360;
	68	116	0.00034	0.00405	0.164	0	0	0	1	0	1	-360	360;
	12	117	0.0329	0.14	0.0358	0	0	0	0	0	1	-360	360;
	75	118	0.0145	0.0481	0.01198	0	0	0	0	0	1	-360	360;
	76	118	0.0164	0.0544	0.01356	0	0	0	0	0	1	-360	360;
];

%%-----  OPF Data  -----%%
%% generator cost data
%	1	startup	shutdown	n	x1	y1	...	xn	yn
%	2	startup	shutdown	n	c(n-1)	...	c0
mpc.gencost = [
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0222222222	20	0;
	2	0	0	3	0.117647059	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0454545455	20	0;
	2	0	0	3	0.0318471338	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	1.42857143	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.526315789	20	0;
	2	0	0	3	0.0490196078	20	0;
	2	0	0	3	0.208333333	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.064516129	20	0;
	2	0	0	3	0.0625	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0255754476	20	0;
	2	0	0	3	0.0255102041	20	0;
	2	0	0	3	0.0193648335	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0209643606	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	2.5	20	0;
	2	0	0	3	0.0164744646	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.0396825397	20	0;
	2	0	0	3	0.25	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.277777778	20	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
	2	0	0	3	0.01	40	0;
];

%% bus names
mpc.bus_name = {
	'Riversde  V2';
	'Pokagon   V2';
	'HickryCk  V2';
	'NwCarlsl  V2';
	'Olive     V2';
	'Kankakee  V2';
	'JacksnRd  V2';
	'Olive     V1';
	'Bequine   V1';
	'Breed     V1';
	'SouthBnd  V2';
	'TwinBrch  V2';
	'Concord   V2';
	'GoshenJt  V2';
	'FtWayne   V2';
	'N. E.     V2';
	'Sorenson  V2';
	'McKinley  V2';
	'Lincoln   V2';
	'Adams     V2';
	'Jay       V2';
	'Randolph  V2';
	'CollCrnr  V2';
	'Trenton   V2';
	'TannrsCk  V2';
	'TannrsCk  V1';
	'Madison   V2';
	'Mullin    V2';
	'Grant     V2';
	'Sorenson  V1';
	'DeerCrk   V2';
	'Delaware  V2';
	'Haviland  V2';
	'Rockhill  V2';
	'WestLima  V2';
	'Sterling  V2';
	'EastLima  V2';
	'EastLima  V1';
	'NwLibrty  V2';
	'West End  V2';
	'S.Tiffin  V2';
	'Howard    V2';
	'S.Kenton  V2';
	'WMVernon  V2';
	'N.Newark  V2';
	'W.Lancst  V2';
	'Crooksvl  V2';
	'Zanesvll  V2';
	'Philo     V2';
	'WCambrdg  V2';
	'Newcmrst  V2';
	'SCoshoct  V2';
	'Wooster   V2';
	'Torrey    V2';
	'Wagenhls  V2';
	'Sunnysde  V2';
	'WNwPhil1  V2';
	'WNwPhil2  V2';
	'Tidd      V2';
	'SWKammer  V2';
	'W.Kammer  V2';
	'Natrium   V2';
	'Tidd      V1';
	'Kammer    V1';
	'Muskngum  V1';
	'Muskngum  V2';
	'Summerfl  V2';
	'Sporn     V1';
	'Sporn     V2';
	'Portsmth  V2';
	'NPortsmt  V2';
	'Hillsbro  V2';
	'Sargents  V2';
	'Bellefnt  V2';
	'SthPoint  V2';
	'Darrah    V2';
	'Turner    V2';
	'Chemical  V2';
	'CapitlHl  V2';
	'CabinCrk  V2';
	'Kanawha   V1';
	'Logan     V2';
	'Sprigg    V2';
	'BetsyLne  V2';
	'BeaverCk  V2';
	'Hazard    V2';
	'Pinevlle  V3';
	'Fremont   V2';
	'ClinchRv  V2';
	'Holston   V2';
	'HolstonT  V2';
	'Saltvlle  V2';
	'Tazewell  V2';
	'Switchbk  V2';
	'Caldwell  V2';
	'Baileysv  V2';
	'Sundial   V2';
	'Bradley   V2';
	'Hinton    V2';
	'Glen Lyn  V2';
	'Wythe     V2';
	'Smythe    V2';
	'Claytor   V2';
	'Hancock   V2';
	'Roanoke   V2';
	'Cloverdl  V2';
	'Reusens   V2';
	'Blaine    V2';
	'Franklin  V2';
	'Fieldale  V2';
	'DanRiver  V2';
	'Danville  V2';
	'Deer Crk  V2';
	'WMedford  V2';
	'Medford   V2';
	'KygerCrk  V2';
	'Corey     V2';
	'WHuntngd  V2';
};

% Warnings from cdf2matp conversion:
%
% ***** check the title format in the first line of the cdf file.
% ***** negative Pg at bus 4 treated as Pd
% ***** negative Pg at bus 8 treated as Pd
% ***** negative Pg at bus 24 treated as Pd
% ***** negative Pg at bus 27 treated as Pd
% ***** negative Pg at bus 40 treated as Pd
% ***** negative Pg at bus 42 treated as Pd
% ***** negative Pg at bus 72 treated as Pd
% ***** negative Pg at bus 73 treated as Pd
% ***** negative Pg at bus 90 treated as Pd
% ***** negative Pg at bus 91 treated as Pd
% ***** negative Pg at bus 99 treated as Pd
% ***** negative Pg at bus 107 treated as Pd
% ***** negative Pg at bus 112 treated as Pd
% ***** negative Pg at bus 113 treated as Pd
% ***** negative Pg at bus 116 treated as Pd
% ***** Insufficient generation, setting Pmax at slack bus (bus 69) to 805.2
% ***** MVA limit of branch 1 - 2 not given, set to 0
% ***** MVA limit of branch 1 - 3 not given, set to 0
% ***** MVA limit of branch 4 - 5 not given, set to 0
% ***** MVA limit of branch 3 - 5 not given, set to 0
% ***** MVA limit of branch 5 - 6 not given, set to 0
% ***** MVA limit of branch 6 - 7 not given, set to 0
% ***** MVA limit of branch 8 - 9 not given, set to 0
% ***** MVA limit of branch 8 - 5 not given, set to 0
% ***** MVA limit of branch 9 - 10 not given, set to 0
% ***** MVA limit of branch 4 - 11 not given, set to 0
% ***** MVA limit of branch 5 - 11 not given, set to 0
% ***** MVA limit of branch 11 - 12 not given, set to 0
% ***** MVA limit of branch 2 - 12 not given, set to 0
% ***** MVA limit of branch 3 - 12 not given, set to 0
% ***** MVA limit of branch 7 - 12 not given, set to 0
% ***** MVA limit of branch 11 - 13 not given, set to 0
% ***** MVA limit of branch 12 - 14 not given, set to 0
% ***** MVA limit of branch 13 - 15 not given, set to 0
% ***** MVA limit of branch 14 - 15 not given, set to 0
% ***** MVA limit of branch 12 - 16 not given, set to 0
% ***** MVA limit of branch 15 - 17 not given, set to 0
% ***** MVA limit of branch 16 - 17 not given, set to 0
% ***** MVA limit of branch 17 - 18 not given, set to 0
% ***** MVA limit of branch 18 - 19 not given, set to 0
% ***** MVA limit of branch 19 - 20 not given, set to 0
% ***** MVA limit of branch 15 - 19 not given, set to 0
% ***** MVA limit of branch 20 - 21 not given, set to 0
% ***** MVA limit of branch 21 - 22 not given, set to 0
% ***** MVA limit of branch 22 - 23 not given, set to 0
% ***** MVA limit of branch 23 - 24 not given, set to 0
% ***** MVA limit of branch 23 - 25 not given, set to 0
% ***** MVA limit of branch 26 - 25 not given, set to 0
% ***** MVA limit of branch 25 - 27 not given, set to 0
% ***** MVA limit of branch 27 - 28 not given, set to 0
% ***** MVA limit of branch 28 - 29 not given, set to 0
% ***** MVA limit of branch 30 - 17 not given, set to 0
% ***** MVA limit of branch 8 - 30 not given, set to 0
% ***** MVA limit of branch 26 - 30 not given, set to 0
% ***** MVA limit of branch 17 - 31 not given, set to 0
% ***** MVA limit of branch 29 - 31 not given, set to 0
% ***** MVA limit of branch 23 - 32 not given, set to 0
% ***** MVA limit of branch 31 - 32 not given, set to 0
% ***** MVA limit of branch 27 - 32 not given, set to 0
% ***** MVA limit of branch 15 - 33 not given, set to 0
% ***** MVA limit of branch 19 - 34 not given, set to 0
% ***** MVA limit of branch 35 - 36 not given, set to 0
% ***** MVA limit of branch 35 - 37 not given, set to 0
% ***** MVA limit of branch 33 - 37 not given, set to 0
% ***** MVA limit of branch 34 - 36 not given, set to 0
% ***** MVA limit of branch 34 - 37 not given, set to 0
% ***** MVA limit of branch 38 - 37 not given, set to 0
% ***** MVA limit of branch 37 - 39 not given, set to 0
% ***** MVA limit of branch 37 - 40 not given, set to 0
% ***** MVA limit of branch 30 - 38 not given, set to 0
% ***** MVA limit of branch 39 - 40 not given, set to 0
% ***** MVA limit of branch 40 - 41 not given, set to 0
% ***** MVA limit of branch 40 - 42 not given, set to 0
% ***** MVA limit of branch 41 - 42 not given, set to 0
% ***** MVA limit of branch 43 - 44 not given, set to 0
% ***** MVA limit of branch 34 - 43 not given, set to 0
% ***** MVA limit of branch 44 - 45 not given, set to 0
% ***** MVA limit of branch 45 - 46 not given, set to 0
% ***** MVA limit of branch 46 - 47 not given, set to 0
% ***** MVA limit of branch 46 - 48 not given, set to 0
% ***** MVA limit of branch 47 - 49 not given, set to 0
% ***** MVA limit of branch 42 - 49 not given, set to 0
% ***** MVA limit of branch 42 - 49 not given, set to 0
% ***** MVA limit of branch 45 - 49 not given, set to 0
% ***** MVA limit of branch 48 - 49 not given, set to 0
% ***** MVA limit of branch 49 - 50 not given, set to 0
% ***** MVA limit of branch 49 - 51 not given, set to 0
% ***** MVA limit of branch 51 - 52 not given, set to 0
% ***** MVA limit of branch 52 - 53 not given, set to 0
% ***** MVA limit of branch 53 - 54 not given, set to 0
% ***** MVA limit of branch 49 - 54 not given, set to 0
% ***** MVA limit of branch 49 - 54 not given, set to 0
% ***** MVA limit of branch 54 - 55 not given, set to 0
% ***** MVA limit of branch 54 - 56 not given, set to 0
% ***** MVA limit of branch 55 - 56 not given, set to 0
% ***** MVA limit of branch 56 - 57 not given, set to 0
% ***** MVA limit of branch 50 - 57 not given, set to 0
% ***** MVA limit of branch 56 - 58 not given, set to 0
% ***** MVA limit of branch 51 - 58 not given, set to 0
% ***** MVA limit of branch 54 - 59 not given, set to 0
% ***** MVA limit of branch 56 - 59 not given, set to 0
% ***** MVA limit of branch 56 - 59 not given, set to 0
% ***** MVA limit of branch 55 - 59 not given, set to 0
% ***** MVA limit of branch 59 - 60 not given, set to 0
% ***** MVA limit of branch 59 - 61 not given, set to 0
% ***** MVA limit of branch 60 - 61 not given, set to 0
% ***** MVA limit of branch 60 - 62 not given, set to 0
% ***** MVA limit of branch 61 - 62 not given, set to 0
% ***** MVA limit of branch 63 - 59 not given, set to 0
% ***** MVA limit of branch 63 - 64 not given, set to 0
% ***** MVA limit of branch 64 - 61 not given, set to 0
% ***** MVA limit of branch 38 - 65 not given, set to 0
% ***** MVA limit of branch 64 - 65 not given, set to 0
% ***** MVA limit of branch 49 - 66 not given, set to 0
% ***** MVA limit of branch 49 - 66 not given, set to 0
% ***** MVA limit of branch 62 - 66 not given, set to 0
% ***** MVA limit of branch 62 - 67 not given, set to 0
% ***** MVA limit of branch 65 - 66 not given, set to 0
% ***** MVA limit of branch 66 - 67 not given, set to 0
% ***** MVA limit of branch 65 - 68 not given, set to 0
% ***** MVA limit of branch 47 - 69 not given, set to 0
% ***** MVA limit of branch 49 - 69 not given, set to 0
% ***** MVA limit of branch 68 - 69 not given, set to 0
% ***** MVA limit of branch 69 - 70 not given, set to 0
% ***** MVA limit of branch 24 - 70 not given, set to 0
% ***** MVA limit of branch 70 - 71 not given, set to 0
% ***** MVA limit of branch 24 - 72 not given, set to 0
% ***** MVA limit of branch 71 - 72 not given, set to 0
% ***** MVA limit of branch 71 - 73 not given, set to 0
% ***** MVA limit of branch 70 - 74 not given, set to 0
% ***** MVA limit of branch 70 - 75 not given, set to 0
% ***** MVA limit of branch 69 - 75 not given, set to 0
% ***** MVA limit of branch 74 - 75 not given, set to 0
% ***** MVA limit of branch 76 - 77 not given, set to 0
% ***** MVA limit of branch 69 - 77 not given, set to 0
% ***** MVA limit of branch 75 - 77 not given, set to 0
% ***** MVA limit of branch 77 - 78 not given, set to 0
% ***** MVA limit of branch 78 - 79 not given, set to 0
% ***** MVA limit of branch 77 - 80 not given, set to 0
% ***** MVA limit of branch 77 - 80 not given, set to 0
% ***** MVA limit of branch 79 - 80 not given, set to 0
% ***** MVA limit of branch 68 - 81 not given, set to 0
% ***** MVA limit of branch 81 - 80 not given, set to 0
% ***** MVA limit of branch 77 - 82 not given, set to 0
% ***** MVA limit of branch 82 - 83 not given, set to 0
% ***** MVA limit of branch 83 - 84 not given, set to 0
% ***** MVA limit of branch 83 - 85 not given, set to 0
% ***** MVA limit of branch 84 - 85 not given, set to 0
% ***** MVA limit of branch 85 - 86 not given, set to 0
% ***** MVA limit of branch 86 - 87 not given, set to 0
% ***** MVA limit of branch 85 - 88 not given, set to 0
% ***** MVA limit of branch 85 - 89 not given, set to 0
% ***** MVA limit of branch 88 - 89 not given, set to 0
% ***** MVA limit of branch 89 - 90 not given, set to 0
% ***** MVA limit of branch 89 - 90 not given, set to 0
% ***** MVA limit of branch 90 - 91 not given, set to 0
% ***** MVA limit of branch 89 - 92 not given, set to 0
% ***** MVA limit of branch 89 - 92 not given, set to 0
% ***** MVA limit of branch 91 - 92 not given, set to 0
% ***** MVA limit of branch 92 - 93 not given, set to 0
% ***** MVA limit of branch 92 - 94 not given, set to 0
% ***** MVA limit of branch 93 - 94 not given, set to 0
% ***** MVA limit of branch 94 - 95 not given, set to 0
% ***** MVA limit of branch 80 - 96 not given, set to 0
% ***** MVA limit of branch 82 - 96 not given, set to 0
% ***** MVA limit of branch 94 - 96 not given, set to 0
% ***** MVA limit of branch 80 - 97 not given, set to 0
% ***** MVA limit of branch 80 - 98 not given, set to 0
% ***** MVA limit of branch 80 - 99 not given, set to 0
% ***** MVA limit of branch 92 - 100 not given, set to 0
% ***** MVA limit of branch 94 - 100 not given, set to 0
% ***** MVA limit of branch 95 - 96 not given, set to 0
% ***** MVA limit of branch 96 - 97 not given, set to 0
% ***** MVA limit of branch 98 - 100 not given, set to 0
% ***** MVA limit of branch 99 - 100 not given, set to 0
% ***** MVA limit of branch 100 - 101 not given, set to 0
% ***** MVA limit of branch 92 - 102 not given, set to 0
% ***** MVA limit of branch 101 - 102 not given, set to 0
% ***** MVA limit of branch 100 - 103 not given, set to 0
% ***** MVA limit of branch 100 - 104 not given, set to 0
% ***** MVA limit of branch 103 - 104 not given, set to 0
% ***** MVA limit of branch 103 - 105 not given, set to 0
% ***** MVA limit of branch 100 - 106 not given, set to 0
% ***** MVA limit of branch 104 - 105 not given, set to 0
% ***** MVA limit of branch 105 - 106 not given, set to 0
% ***** MVA limit of branch 105 - 107 not given, set to 0
% ***** MVA limit of branch 105 - 108 not given, set to 0
% ***** MVA limit of branch 106 - 107 not given, set to 0
% ***** MVA limit of branch 108 - 109 not given, set to 0
% ***** MVA limit of branch 103 - 110 not given, set to 0
% ***** MVA limit of branch 109 - 110 not given, set to 0
% ***** MVA limit of branch 110 - 111 not given, set to 0
% ***** MVA limit of branch 110 - 112 not given, set to 0
% ***** MVA limit of branch 17 - 113 not given, set to 0
% ***** MVA limit of branch 32 - 113 not given, set to 0
% ***** MVA limit of branch 32 - 114 not given, set to 0
% ***** MVA limit of branch 27 - 115 not given, set to 0
% ***** MVA limit of branch 114 - 115 not given, set to 0
% ***** MVA limit of branch 68 - 116 not given, set to 0
% ***** MVA limit of branch 12 - 117 not given, set to 0
% ***** MVA limit of branch 75 - 118 not given, set to 0
% ***** MVA limit of branch 76 - 118 not given, set to 0
)mpc";

inline constexpr std::array<BundledCaseText, 6> k_bundled_cases{{
    {"bus3", "bus3.m", k_bus3_text},
    {"bus6", "case6ww.m", k_bus6_text},
    {"bus14", "case14.m", k_bus14_text},
    {"bus39", "case39.m", k_bus39_text},
    {"bus57", "case57.m", k_bus57_text},
    {"bus118", "case118.m", k_bus118_text},
}};

}  // namespace mmtd::detail
