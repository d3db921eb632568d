"""Writes data/catalog.json to stdout. Coordinates were found by construction
or by the seeded searches noted in each entry; run `railstick catalog verify`
after regenerating."""
import json
WIND = {'0': 0, '1_1': 1, '2_5': 0, '2_3': -2, '2_6': -2}
COMP = {'0': ('0_1', '0_1'), '1_1': ('0_1', '0_1'), '2_1': ('3_1', '0_1'), '2_2': ('0_1', '0_1'), '2_4': ('3_1', '0_1'), '2_5': ('0_1', '0_1'), '3_2': ('4_1', '0_1'), '2_3': ('0_1', '0_1'), '2_6': ('0_1', '0_1')}
def arc(name, sticks, cls, verts, note, **kw):
    e = {"name": name, "kind": "rail-arc", "sticks": sticks, "class": cls}
    e.update(kw); e["under"], e["over"] = COMP[name]
    if name in WIND: e["winding"] = WIND[name]
    e["note"] = note
    e["conformation"] = {"type": "rail-arc", "vertices": verts}
    return e
xy = [(0,0),(0,12),(3,-15),(-4,15),(7,-13),(-5,9),(1,0)]
z23 = [0,1,2,3,4,5,6]; z26 = [0,1,2,5,6,3,4]
entries = [
  arc("0", 1, "trivial", [[0,0,0],[1,0,0]], "single stick between the rails"),
  arc("1_1", 4, "1_1", [[0,0,2],[2,-1,-1],["1/2",2,-1],["-1/2","-1/2",0],[1,0,0]], "minimal four-stick arc"),
  arc("2_1", 4, "2_1", [[0,0,0],["5/2","-1/2","-1/2"],[0,1,"-1/2"],["3/2","-3/2",0],[1,0,1]], "minimal four-stick arc"),
  arc("2_2", 5, "2_2", [[0,0,"1/2"],["3/2",1,"-3/2"],["1/2",-2,"1/2"],[1,"3/2","1/2"],[-1,"-1/2","-3/2"],[1,0,"3/2"]], "minimal five-stick arc"),
  arc("2_4", 5, "2_4", [[0,0,"29/16"],["13/8","-1/8","-21/16"],["-5/4","15/8","9/16"],["25/16","-9/16","-13/16"],["-3/4","1/16","7/16"],[1,0,"25/16"]], "minimal five-stick arc"),
  arc("2_5", 5, "2_5", [[0,0,"7/4"],["-3/4","-1/8","-1/4"],["5/4","5/4","3/2"],["7/4","-5/4","-5/8"],["-5/4","-1/8","-1/8"],[1,0,0]], "minimal five-stick arc"),
  arc("3_2", 5, "3_2", [[0,0,"7/4"],["9/4","5/4","-1/2"],["-1/4",2,"-1/2"],["5/4","-1/2","-1/2"],["5/4","3/2","1/4"],[1,0,"3/2"]], "five-stick arc; class name provisional"),
  arc("2_3", 6, "2_3", [[x,y,z] for (x,y),z in zip(xy,z23)], "six-stick arc winding twice, heights increasing"),
  arc("2_6", 6, "2_6", [[x,y,z] for (x,y),z in zip(xy,z26)], "same shadow as 2_3 with two heights exchanged"),
  {"name": "L2a1", "kind": "multi-rail-arc", "sticks": 4, "under": "L2a1", "over": "L2a1", "components": ["0_1"], "minimal_sum": True,
   "note": "spanning stick threaded through a triangle",
   "conformation": {"type": "multi-rail-arc", "arc": [[0,0,0],[1,0,0]],
                    "knots": [[["1/2",-1,-1],["1/2",1,-1],["1/2",0,1]]]}},
  {"name": "lattice 2_1", "kind": "lattice-rail-arc", "sticks": 8, "class": "2_1", "under": "3_1", "over": "0_1",
   "note": "two-loop lattice torus spiral minus its lowest loop",
   "conformation": {"type": "lattice-rail-arc", "vertices": [[0,0,2],[0,-4,2],[4,-4,2],[4,-4,1],[4,-1,1],[-1,-1,1],[-1,-1,3],[-1,-3,3],[3,-3,3]], "head_rail": [3,-3]}},
  {"name": "lattice 3_2", "kind": "lattice-rail-arc", "sticks": 10, "class": "3_2", "under": "0_1", "over": "4_1",
   "note": "ten-stick lattice arc whose over pass closes it to a fourteen-stick lattice figure-eight",
   "conformation": {"type": "lattice-rail-arc", "vertices": [[0,0,0],[4,0,0],[4,0,4],[1,0,4],[1,0,3],[1,-3,3],[3,-3,3],[3,1,3],[3,1,-1],[2,1,-1],[2,-1,-1]], "head_rail": [2,-1]}},
  {"name": "lattice L2a1", "kind": "lattice-multi-arc", "sticks": 5, "under": "L2a1", "over": "L2a1", "components": ["0_1"], "minimal_sum": True,
   "note": "lattice stick threaded through a square; the rails share a y-coordinate",
   "conformation": {"type": "lattice-multi-arc", "arc": [[0,0,0],[2,0,0]], "head_rail": [2,0],
                    "knots": [[[1,-1,-1],[1,1,-1],[1,1,1],[1,-1,1]]]}},
]
import re
CERTS = [{"name": "rs 5_1", "kind": "rail-arc", "sticks": 6, "under": "5_1", "note": "six-stick arc with under companion 5_1, found by seeded random sampling (seed 11, sample 333)", "conformation": {"type": "rail-arc", "vertices": [[0, 0, "267/256"], ["563/256", "95/128", "-491/256"], ["-21/256", "-1/128", "-17/256"], ["111/64", "-425/256", "-75/128"], ["-61/128", "213/128", "15/64"], ["-45/256", "-127/256", "-425/256"], [1, 0, "361/256"]]}}, {"name": "rs 5_2", "kind": "rail-arc", "sticks": 6, "under": "5_2", "note": "six-stick arc with under companion 5_2, found by seeded random sampling (seed 11, sample 10492)", "conformation": {"type": "rail-arc", "vertices": [[0, 0, "53/64"], ["187/128", "103/128", "241/256"], ["43/128", "-215/128", "-225/128"], ["-49/256", "153/128", "-229/256"], ["-125/256", "-275/256", "-35/256"], ["391/256", "-83/128", -2], [1, 0, "393/256"]]}}, {"name": "rs 6_2", "kind": "rail-arc", "sticks": 6, "under": "6_2", "note": "six-stick arc with under companion 6_2, found by seeded random sampling (seed 11, sample 29875)", "conformation": {"type": "rail-arc", "vertices": [[0, 0, "301/256"], ["325/256", "123/256", "-295/256"], ["59/256", "-345/256", "41/128"], ["-3/16", "37/128", "15/64"], ["557/256", "-359/256", "307/256"], ["11/64", "359/256", "-245/128"], [1, 0, "155/256"]]}}, {"name": "rs 6_1", "kind": "rail-arc", "sticks": 6, "under": "6_1", "note": "six-stick arc with under companion 6_1, found by seeded random sampling (seed 11, sample 192157)", "conformation": {"type": "rail-arc", "vertices": [[0, 0, "21/32"], ["-21/16", "45/128", "-203/256"], ["253/128", "-37/128", "-3/256"], ["-109/128", "311/256", "111/256"], ["77/256", "-167/256", "-67/64"], ["-15/64", "467/256", "25/128"], [1, 0, "159/128"]]}}, {"name": "rs 6_3", "kind": "rail-arc", "sticks": 6, "under": "6_3", "note": "six-stick arc with under companion 6_3, found by seeded random sampling (seed 11, sample 289173)", "conformation": {"type": "rail-arc", "vertices": [[0, 0, "13/128"], ["407/256", "-263/256", "-11/64"], ["-161/128", "253/256", "-257/256"], ["633/256", "-307/256", "271/256"], ["-193/256", "23/16", "-347/256"], ["-293/256", "-11/64", "-9/128"], [1, 0, "-5/256"]]}}]
entries += CERTS
LINKS = json.loads(r'''[{"name": "L6n1", "kind": "multi-rail-arc", "sticks": 7, "under": "L6n1", "components": ["0_1", "0_1"], "minimal_sum": true, "note": "spanning stick with closed components 0_1, 0_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["-17/32", "1/16", "1/32"], ["23/64", "-13/64", "-23/16"], ["27/32", "41/64", "-9/32"]], [["13/32", "1/8", "-61/64"], ["17/8", "-31/32", "47/64"], ["33/32", "107/64", "117/64"]]]}}, {"name": "L7n1", "kind": "multi-rail-arc", "sticks": 7, "under": "L7n1", "components": ["3_1"], "minimal_sum": true, "note": "spanning stick with closed components 3_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["55/32", "-61/32", "23/64"], ["-21/16", "-15/32", "7/8"], ["21/16", "59/64", "-43/32"], ["-33/32", "-27/32", "-27/32"], ["-17/64", "-19/32", "11/8"], ["23/64", "93/64", "-97/64"]]]}}, {"name": "L7n2", "kind": "multi-rail-arc", "sticks": 7, "under": "L7n2", "components": ["3_1"], "minimal_sum": true, "note": "spanning stick with closed components 3_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["141/64", "-107/64", "125/64"], ["63/32", "123/64", "17/16"], ["-7/16", "-21/16", "-97/64"], ["133/64", "-91/64", "-41/32"], ["-77/64", "61/32", "9/8"], ["-5/16", "-31/64", "-117/64"]]]}}, {"name": "L8n1", "kind": "multi-rail-arc", "sticks": 8, "under": "L8n1", "components": ["4_1"], "minimal_sum": true, "note": "spanning stick with closed components 4_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["7/32", "89/64", "-5/4"], ["33/64", "-63/64", "-89/64"], ["13/16", "41/32", "31/32"], ["59/32", "21/16", "-91/64"], ["-11/64", "-89/64", "17/32"], ["-71/64", "17/16", "-61/32"], ["75/32", "-67/64", "9/32"]]]}}, {"name": "L8n2", "kind": "multi-rail-arc", "sticks": 8, "under": "L8n2", "components": ["4_1"], "minimal_sum": true, "note": "spanning stick with closed components 4_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["-3/64", "19/64", "-27/32"], ["13/8", "-43/64", "-3/8"], ["121/64", "-5/8", "39/32"], ["-7/16", "11/64", "-21/16"], ["29/64", "-29/32", "101/64"], ["57/32", "7/32", "-121/64"], ["1/64", "-47/32", "29/32"]]]}}, {"name": "L8n8", "kind": "multi-rail-arc", "sticks": 10, "under": "L8n8", "components": ["0_1", "0_1", "0_1"], "minimal_sum": true, "note": "spanning stick with closed components 0_1, 0_1, 0_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["7/8", "35/64", "5/32"], [-1, "-47/64", "-1/4"], ["-9/64", "35/32", "17/16"]], [["27/16", "-17/64", "29/32"], ["-1/16", "39/64", "3/64"], ["1/4", "19/32", "-95/64"]], [["25/64", "25/16", "15/64"], ["87/64", "-39/32", "-79/64"], ["-33/32", "-45/64", "-25/32"]]]}}, {"name": "L9n7", "kind": "multi-rail-arc", "sticks": 9, "under": "L9n7", "components": ["5_2"], "minimal_sum": true, "note": "spanning stick with closed components 5_2 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["-41/64", "31/16", "33/64"], ["-93/64", "-75/64", "-55/64"], ["127/64", 1, "-123/64"], ["5/4", "-113/64", "63/32"], ["-43/32", "9/64", "55/64"], ["-23/32", "-43/64", "-79/64"], ["151/64", "-21/64", "29/32"], ["125/64", "-77/64", "-49/32"]]]}}, {"name": "L9n20", "kind": "multi-rail-arc", "sticks": 10, "under": "L9n20", "components": ["0_1", "3_1"], "minimal_sum": true, "note": "spanning stick with closed components 0_1, 3_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["99/64", "1/8", "-61/32"], ["87/64", "-1/4", "-19/64"], ["-73/64", "17/32", "3/8"]], [["15/32", "3/2", "-111/64"], ["57/64", "-73/64", "-53/32"], ["95/64", "23/32", "-21/32"], ["-13/32", "75/64", "71/64"], ["19/16", "-17/64", "-99/64"], ["43/32", "-113/64", "5/32"]]]}}, {"name": "L9n21", "kind": "multi-rail-arc", "sticks": 10, "under": "L9n21", "components": ["0_1", "3_1"], "minimal_sum": true, "note": "spanning stick with closed components 0_1, 3_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["17/32", "5/64", "53/64"], ["21/32", "113/64", "-5/4"], ["11/16", "-19/32", "-101/64"]], [["115/64", "49/32", "1/32"], ["-71/64", -2, "-33/64"], ["13/16", "-3/16", "117/64"], [0, "43/32", "-13/8"], ["127/64", "1/32", "7/32"], ["-3/8", "7/32", "5/32"]]]}}, {"name": "L10n113", "kind": "multi-rail-arc", "sticks": 13, "under": "L10n113", "components": ["0_1", "0_1", "0_1", "0_1"], "minimal_sum": true, "note": "spanning stick with closed components 0_1, 0_1, 0_1, 0_1 found by seeded uniform sampling; sticks meet the component-sum bound", "conformation": {"type": "multi-rail-arc", "arc": [[0, 0, 0], [1, 0, 0]], "knots": [[["41/64", "3/2", "23/16"], ["13/8", "-3/4", "45/64"], ["45/64", "-5/8", "-5/4"]], [["-77/64", "13/64", "-1/32"], ["-5/32", "-1/4", 1], ["3/4", "-3/16", "-3/64"]], [["-3/8", "27/16", "95/64"], ["5/64", "-41/32", "-13/16"], ["27/64", "23/16", "7/32"]], [["23/32", "7/4", "69/64"], ["-39/64", "3/64", "35/64"], ["5/8", "-53/32", "35/32"]]]}}]''')
entries += LINKS
out = json.dumps({"version": 1, "entries": entries}, indent=1)
out = re.sub(r'\[\s*([^\[\]{}]*?)\s*\]', lambda m: '[' + re.sub(r'\s*\n\s*', ' ', m.group(1)) + ']', out)
print(out)
