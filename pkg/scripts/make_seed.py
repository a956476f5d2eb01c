#!/usr/bin/env python3
"""Regenerate the bundled seed lexicon under data/seed/.

The seed covers the full example set the engine is tested against: the
verb cluster around лгать/лъжа, the execution and spoiling clusters, the
dublet and register showcases, the diffuse/disjunctive unique words, and
the false/empty warning pairs. Run from the repository root:

    python scripts/make_seed.py
"""

from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SEED = ROOT / "data" / "seed"


def sense(sid, rank, gloss_ru, gloss_bg, ted=None, ir=None, aspect=None,
          citations=None, idioms=None, synonyms=None):
    out = {"id": sid, "rank": rank, "gloss_ru": gloss_ru, "gloss_bg": gloss_bg}
    if ted:
        out["ted"] = ted
    if ir:
        out["ir"] = {"ru": ir[0], "bg": ir[1]}
    if aspect:
        out["aspect"] = aspect
    if citations:
        out["citations"] = citations
    if idioms:
        out["idioms"] = idioms
    if synonyms:
        out["synonyms"] = synonyms
    return out


def cit(text, annotation=None, source="НКРЯ", url=None):
    out = {"text": text, "source": source}
    if annotation:
        out["annotation"] = annotation
    if url:
        out["url"] = url
    return out


LGAT_CITATIONS = [
    cit("...если этим словом хотят обозначить не какие-нибудь специальные приёмы, "
        "но лишь то, что автор не лжёт против жизни.", "лгать против"),
    cit("Ничего я не лгу! — Он даже как будто обиделся.", "никак (съвсем, изобщо) не лъжа"),
    cit("Не лгут они даже в пустяках.", "лгать в чем?"),
    cit("Лицом к лицу с людьми так лгать, конечно, невозможно.", "лгать как?"),
    cit("Я снова лгу перед лицом Твоим, Господь!", "лгать перед..."),
    cit("Лгут по двум противоположным причинам: от фантазии и от отсутствия оной.",
        "лгать по..."),
    cit("Вы мне лишний раз напоминаете, что я лгу ради вас, — взмолился Илья Семенович.",
        "лгать ради..."),
]

DISINFO = {"top": "disorienting", "subtype": "дезинформирующее"}

LEXEMES = [
    # --- the лгать / лъжа cluster -------------------------------------
    dict(id="lgat", lemma="лгать", language="ru", pos="verb", etymon="et-lug",
         reflex_transparent=True,
         senses=[
             sense("lgat-1", 1, "говорить неправду, произносить ложь",
                   "говоря неистина", ted=DISINFO, ir=("не правда", ""),
                   aspect="imperfective", citations=LGAT_CITATIONS,
                   idioms=["лгать в глаза", "лжет на каждом шагу"],
                   synonyms=["врать", "обманывать"]),
             sense("lgat-2", 2, "клеветать, распространять о ком-либо заведомо ложные слухи",
                   "клеветя, разпространявам лъжливи слухове за някого",
                   ted={"top": "demeaning"}, ir=("опозорен", "опорочен"),
                   aspect="imperfective",
                   citations=[cit("...безнаказанно лгать на наше советское прошлое.",
                                  "лгать на...")]),
         ]),
    dict(id="lazha-v", lemma="лъжа", language="bg", pos="verb", etymon="et-lug",
         reflex_transparent=True,
         senses=[
             sense("lzh-bg-1", 1, "говорить неправду", "говоря неистина",
                   ted=DISINFO, ir=("не правда", ""), aspect="imperfective",
                   citations=[cit("Той ни лъжеше непрекъснато.", source="БНК")],
                   synonyms=["мамя", "заблуждавам"]),
             sense("lzh-bg-2", 2, "намеренно вводить кого-либо в заблуждение",
                   "мамя, въвеждам някого в заблуждение",
                   ted={"top": "disorienting"}, ir=("обманут", "излъган")),
         ]),
    dict(id="vrat", lemma="врать", language="ru", pos="verb",
         register=["colloquial"],
         senses=[
             sense("vrat-1", 1, "говорить неправду (разг.)", "говоря неистина (разг.)",
                   ted=DISINFO, ir=("не правда", ""), aspect="imperfective"),
         ]),
    dict(id="obmanyvat", lemma="обманывать", language="ru", pos="verb",
         etymon="et-man", reflex_transparent=True,
         senses=[
             sense("obm-1", 1, "намеренно вводить кого-либо в заблуждение",
                   "мамя, въвеждам някого в заблуждение",
                   ted={"top": "disorienting"}, ir=("обманут", "излъган"),
                   citations=[cit("Он обманывал всех, и все обманывали его.")]),
             sense("obm-2", 2, "нарушать супружескую верность", "изневерявам",
                   ted={"top": "disorienting"}, ir=("обманут", "излъган")),
         ]),
    dict(id="mamya", lemma="мамя", language="bg", pos="verb", etymon="et-man",
         reflex_transparent=True,
         senses=[
             sense("mam-1", 1, "обманывать, вводить в заблуждение",
                   "измамвам, въвеждам в заблуждение",
                   ted={"top": "disorienting"}, ir=("обманут", "излъган")),
         ]),
    dict(id="klevetat", lemma="клеветать", language="ru", pos="verb",
         etymon="et-klevet", reflex_transparent=True,
         senses=[
             sense("klt-1", 1, "распространять о ком-либо заведомо ложные слухи",
                   "разпространявам клевети за някого",
                   ted={"top": "demeaning"}, ir=("опозорен", "опорочен"),
                   citations=[cit("Студент, оказалось, вовсе не клеветал на профессора.")]),
         ]),
    dict(id="klevetya", lemma="клеветя", language="bg", pos="verb",
         etymon="et-klevet", reflex_transparent=True,
         senses=[
             sense("klv-1", 1, "распространять о ком-либо клевету",
                   "разпространявам клевети за някого",
                   ted={"top": "demeaning"}, ir=("опозорен", "опорочен")),
         ]),
    dict(id="izneveryavam", lemma="изневерявам", language="bg", pos="verb",
         senses=[
             sense("izn-1", 1, "нарушать супружескую верность",
                   "нарушавам съпружеска вярност",
                   ted={"top": "disorienting"}, ir=("обманут", "излъган")),
         ]),
    dict(id="izmenyat", lemma="изменять", language="ru", pos="verb",
         etymon="et-izmen", reflex_transparent=True,
         senses=[
             sense("izm-ru-1", 1, "делать иным, переменять", "правя друг, променям"),
             sense("izm-ru-2", 2, "нарушать верность (супружескую, родине)",
                   "изневерявам, изменям",
                   ted={"top": "disorienting"}, ir=("обманут", "излъган")),
         ]),
    dict(id="izmenyam", lemma="изменям", language="bg", pos="verb",
         etymon="et-izmen", reflex_transparent=True,
         senses=[
             sense("izm-bg-1", 1, "делать другим, изменять", "правя друг, променям"),
         ]),
    dict(id="lzhivyj", lemma="лживый", language="ru", pos="adjective",
         etymon="et-lug", reflex_transparent=True,
         senses=[
             sense("lzv-ru-1", 1, "склонный лгать; содержащий ложь",
                   "склонен да лъже; лъжовен", ted={"top": "disorienting"}),
         ]),
    dict(id="lazhliv", lemma="лъжлив", language="bg", pos="adjective",
         etymon="et-lug", reflex_transparent=True,
         senses=[
             sense("lzv-bg-1", 1, "склонный лгать; лживый",
                   "склонен да лъже; неистинен", ted={"top": "disorienting"}),
         ]),
    # --- warning-only nouns near лъжа ---------------------------------
    dict(id="lazha-n", lemma="лажа", language="ru", pos="noun",
         register=["slang"],
         senses=[sense("lzn-1", 1, "ерунда, фальшь, обман (жарг.)",
                       "глупост, измама (жарг.)")]),
    dict(id="lyzha", lemma="лыжа", language="ru", pos="noun",
         senses=[sense("lyz-1", 1, "плоский полоз для передвижения по снегу",
                       "ска, плоска плъзгалка за сняг")]),
    # --- killing / execution cluster ----------------------------------
    dict(id="ubivat", lemma="убивать", language="ru", pos="verb", etymon="et-ubi",
         reflex_transparent=True,
         senses=[sense("ubv-ru-1", 1, "лишать жизни", "лишавам от живот",
                       ted={"top": "liquidating"}, ir=("убит", "убит"),
                       aspect="imperfective")]),
    dict(id="ubivam", lemma="убивам", language="bg", pos="verb", etymon="et-ubi",
         reflex_transparent=True,
         senses=[sense("ubv-bg-1", 1, "лишать жизни", "лишавам от живот",
                       ted={"top": "liquidating"}, ir=("убит", "убит"))]),
    # Conditional homonyms: the hanging verb split into its two meanings.
    dict(id="veshat-i", lemma="вешать", language="ru", pos="verb", etymon="et-ves",
         reflex_transparent=True,
         senses=[sense("vsh1-1", 1, "помещать в висячем положении",
                       "окачвам да виси", aspect="imperfective")]),
    dict(id="veshat-ii", lemma="вешать", language="ru", pos="verb", etymon="et-ves",
         reflex_transparent=True,
         senses=[sense("vsh2-1", 1, "подвергать смертной казни через повешение",
                       "умъртвявам чрез обесване",
                       ted={"top": "liquidating"}, ir=("казнен", "обесен"),
                       aspect="imperfective")]),
    dict(id="vesya", lemma="веся", language="bg", pos="verb", etymon="et-ves",
         reflex_transparent=True,
         senses=[sense("ves-1", 1, "помещать в висячем положении",
                       "окачвам да виси")]),
    dict(id="besya", lemma="беся", language="bg", pos="verb", etymon="et-ves",
         reflex_transparent=False,
         senses=[sense("bes-1", 1, "подвергать смертной казни через повешение",
                       "умъртвявам чрез окачване на въже, което пристяга шията",
                       ted={"top": "liquidating"}, ir=("казнен", "обесен"))]),
    dict(id="kaznit", lemma="казнить", language="ru", pos="verb",
         senses=[sense("kzn-1", 1, "подвергать смертной казни",
                       "изпълнявам смъртно наказание",
                       ted={"top": "liquidating"}, ir=("казнен", "екзекутиран"),
                       aspect="biaspectual")]),
    dict(id="ekzekutirovat", lemma="экзекутировать", language="ru", pos="verb",
         etymon="et-ekzek", reflex_transparent=True, borrowed_from="third",
         pre_registered=True,
         senses=[sense("ekz-ru-1", 1, "казнить, приводить в исполнение смертный приговор",
                       "екзекутирам",
                       ted={"top": "liquidating"}, ir=("казнен", "екзекутиран"))]),
    dict(id="ekzekutiram", lemma="екзекутирам", language="bg", pos="verb",
         etymon="et-ekzek", reflex_transparent=True, borrowed_from="third",
         senses=[sense("ekz-bg-1", 1, "приводить в исполнение смертный приговор",
                       "изпълнявам смъртна присъда",
                       ted={"top": "liquidating"}, ir=("казнен", "екзекутиран"))]),
    # --- spoiling cluster ---------------------------------------------
    dict(id="portit", lemma="портить", language="ru", pos="verb", etymon="et-port",
         reflex_transparent=True,
         senses=[sense("prt-ru-1", 1, "делать негодным, плохим, повреждать",
                       "правя негоден, повреждам",
                       ted={"top": "deforming"}, ir=("испорчен", "развален"))]),
    dict(id="izportvam", lemma="изпортвам", language="bg", pos="verb",
         etymon="et-port", reflex_transparent=True, register=["colloquial"],
         senses=[sense("prt-bg-1", 1, "делать негодным, портить (разг.)",
                       "правя негоден, повреждам (разг.)",
                       ted={"top": "deforming"}, ir=("испорчен", "развален"))]),
    dict(id="razvalivat", lemma="разваливать", language="ru", pos="verb",
         etymon="et-razval", reflex_transparent=True,
         senses=[sense("rzv-ru-1", 1, "раскидывать, разрушать что-либо сложенное",
                       "събарям, руша нещо натрупано",
                       ted={"top": "liquidating"}, ir=("разрушен", "съборен"))]),
    dict(id="razvalyam", lemma="развалям", language="bg", pos="verb",
         etymon="et-razval", reflex_transparent=True,
         senses=[
             sense("rzv-bg-1", 1, "разрушать, разваливать (строение, кучу)",
                   "събарям, руша (сграда, куп)",
                   ted={"top": "liquidating"}, ir=("разрушен", "съборен")),
             sense("rzv-bg-2", 2, "делать негодным, ухудшать",
                   "правя негоден, влошавам",
                   ted={"top": "deforming", "subtype": "девальвирующее"},
                   ir=("испорчен", "развален")),
         ]),
    # --- borrowing showcases ------------------------------------------
    dict(id="grozit", lemma="грозить", language="ru", pos="verb", etymon="et-groz",
         reflex_transparent=True,
         senses=[sense("grz-ru-1", 1, "угрожать кому-либо", "заплашвам, застрашавам",
                       ted={"top": "provoking"}, ir=("под угрозой", "заплашен"))]),
    dict(id="grozya-i", lemma="грозя", language="bg", pos="verb", etymon="et-groz",
         reflex_transparent=True, borrowed_from="ru",
         senses=[sense("grz-bg-1", 1, "угрожать кому-либо", "заплашвам, застрашавам",
                       ted={"top": "provoking"}, ir=("под угрозой", "заплашен"))]),
    dict(id="grozya-ii", lemma="грозя", language="bg", pos="verb",
         senses=[sense("grz2-bg-1", 1, "делать некрасивым", "правя некрасив, загрозявам",
                       ted={"top": "deforming"}, ir=("обезображен", "загрозен"))]),
    dict(id="falshivit", lemma="фальшивить", language="ru", pos="verb",
         etymon="et-falsh", reflex_transparent=True, borrowed_from="third",
         senses=[sense("fls-ru-1", 1, "петь или играть фальшиво; вести себя неискренне",
                       "пея или свиря фалшиво; лицемеря",
                       ted={"top": "disorienting"}, ir=("введен в заблуждение", "излъган"))]),
    dict(id="falshivya", lemma="фалшивя", language="bg", pos="verb",
         etymon="et-falsh", reflex_transparent=False, borrowed_from="third",
         senses=[sense("fls-bg-1", 1, "петь или играть фальшиво; лицемерить",
                       "пея или свиря фалшиво; лицемеря",
                       ted={"top": "disorienting"}, ir=("введен в заблуждение", "излъган"))]),
    dict(id="angazhirovat", lemma="ангажировать", language="ru", pos="verb",
         etymon="et-angaj", reflex_transparent=True, borrowed_from="third",
         senses=[sense("ang-ru-1", 1, "приглашать, нанимать (артиста); обязывать",
                       "каня, наемам (артист); обвързвам",
                       ted={"top": "annexing"}, ir=("ангажирован", "ангажиран"))]),
    dict(id="angazhiram", lemma="ангажирам", language="bg", pos="verb",
         etymon="et-angaj", reflex_transparent=True, borrowed_from="third",
         senses=[sense("ang-bg-1", 1, "приглашать, нанимать; обязывать",
                       "каня, наемам; обвързвам",
                       ted={"top": "annexing"}, ir=("ангажирован", "ангажиран"))]),
    dict(id="arestovat", lemma="арестовать", language="ru", pos="verb",
         etymon="et-arest", reflex_transparent=True, borrowed_from="third",
         senses=[sense("arr-ru-1", 1, "подвергать аресту, лишать свободы",
                       "поставям под арест",
                       ted={"top": "blocking"}, ir=("арестован", "арестуван"))]),
    dict(id="arestuvam", lemma="арестувам", language="bg", pos="verb",
         etymon="et-arest", reflex_transparent=True, borrowed_from="third",
         senses=[sense("arr-bg-1", 1, "подвергать аресту", "поставям под арест",
                       ted={"top": "blocking"}, ir=("арестован", "арестуван"))]),
    # --- header-formatting showcases ----------------------------------
    dict(id="ahnut", lemma="ахнуть", language="ru", pos="verb", etymon="et-ahn",
         reflex_transparent=True,
         senses=[
             sense("ahn-ru-1", 1, "воскликнуть «ах», выразить удивление",
                   "възкликна «ах»", aspect="perfective"),
             sense("ahn-ru-2", 2, "с силой ударить кого-либо (прост.)",
                   "ударя силно някого (простонар.)",
                   ted={"top": "deforming"}, ir=("ударен", "ударен"),
                   aspect="perfective"),
         ]),
    dict(id="ahna", lemma="ахна", language="bg", pos="verb", etymon="et-ahn",
         reflex_transparent=True,
         senses=[sense("ahn-bg-1", 1, "воскликнуть «ах»", "възкликна «ах»")]),
    dict(id="bremenit", lemma="бременить", language="ru", pos="verb",
         etymon="et-bremen", reflex_transparent=True, register=["dated"],
         senses=[sense("brm-1", 1, "обременять, отягощать (уст.)",
                       "обременявам, натоварвам (остар.)",
                       ted={"top": "annexing"}, ir=("обременен", "обременен"))]),
    dict(id="obremenyat", lemma="обременять", language="ru", pos="verb",
         etymon="et-bremen", reflex_transparent=True,
         senses=[sense("obr-ru-1", 1, "отягощать, налагать бремя",
                       "натоварвам с бреме",
                       ted={"top": "annexing"}, ir=("обременен", "обременен"))]),
    dict(id="obremenyavam", lemma="обременявам", language="bg", pos="verb",
         etymon="et-bremen", reflex_transparent=True,
         senses=[sense("obr-bg-1", 1, "отягощать, налагать бремя",
                       "натоварвам с бреме",
                       ted={"top": "annexing"}, ir=("обременен", "обременен"))]),
    dict(id="blyudoliz", lemma="блюдолиз", language="ru", pos="noun",
         etymon="et-blyud", reflex_transparent=True,
         register=["colloquial", "disapproving"],
         senses=[sense("bld-ru-1", 1, "подхалим, лизоблюд", "подлизурко, подмазвач",
                       ted={"top": "expansive_behavior"})]),
    dict(id="lizoblyud", lemma="лизоблюд", language="ru", pos="noun",
         etymon="et-blyud", reflex_transparent=False,
         register=["colloquial", "disapproving"],
         senses=[sense("liz-1", 1, "подхалим, блюдолиз", "подлизурко, подмазвач",
                       ted={"top": "expansive_behavior"})]),
    dict(id="blyudolizets", lemma="блюдолизец", language="bg", pos="noun",
         etymon="et-blyud", reflex_transparent=True,
         register=["colloquial", "disapproving"],
         senses=[sense("bld-bg-1", 1, "подхалим, блюдолиз", "подлизурко, подмазвач",
                       ted={"top": "expansive_behavior"})]),
    dict(id="glavar", lemma="главарь", language="ru", pos="noun", etymon="et-glav",
         reflex_transparent=True, register=["colloquial", "disapproving"],
         senses=[sense("glv-ru-1", 1, "предводитель, вожак (неодобрит.)",
                       "предводител, водач (неодобр.)",
                       ted={"top": "expansive_behavior"})]),
    dict(id="glavatar", lemma="главатар(ка)", language="bg", pos="noun",
         etymon="et-glav", reflex_transparent=True, register=["colloquial"],
         senses=[sense("glv-bg-1", 1, "предводитель, вожак",
                       "предводител, водач",
                       ted={"top": "expansive_behavior"})]),
    # --- shaming cluster ------------------------------------------------
    dict(id="stydit", lemma="стыдить", language="ru", pos="verb",
         senses=[sense("std-1", 1, "вызывать у кого-либо чувство стыда",
                       "карам някого да изпитва срам",
                       ted={"top": "demeaning"}, ir=("пристыжен", "засрамен"))]),
    dict(id="zasramvam", lemma="засрамвам", language="bg", pos="verb",
         etymon="et-sram", reflex_transparent=True,
         senses=[sense("zsr-1", 1, "вызывать чувство стыда",
                       "карам някого да изпитва срам",
                       ted={"top": "demeaning"}, ir=("пристыжен", "засрамен"))]),
    dict(id="sramit", lemma="срамить", language="ru", pos="verb", etymon="et-sram",
         reflex_transparent=True,
         senses=[sense("srm-ru-1", 1, "позорить, бесчестить", "позоря, безчестя",
                       ted={"top": "demeaning"}, ir=("опозорен", "посрамен"))]),
    dict(id="sramya", lemma="срамя", language="bg", pos="verb", etymon="et-sram",
         reflex_transparent=True,
         senses=[sense("srm-bg-1", 1, "позорить, бесчестить", "позоря, безчестя",
                       ted={"top": "demeaning"}, ir=("опозорен", "посрамен"))]),
    # --- voting cluster (prefix-analogy false pair) ----------------------
    dict(id="ballotirovat", lemma="баллотировать", language="ru", pos="verb",
         etymon="et-bal", reflex_transparent=True, borrowed_from="third",
         senses=[sense("bal-ru-1", 1, "решать вопрос подачей голосов",
                       "решавам чрез гласуване",
                       ted={"top": "regulating"}, ir=("избран", "избран"))]),
    dict(id="balotiram", lemma="балотирам", language="bg", pos="verb",
         etymon="et-bal", reflex_transparent=True, borrowed_from="third",
         senses=[sense("bal-bg-1", 1, "выдвигаться, голосовать на выборах",
                       "кандидатствам на избори, гласувам",
                       ted={"top": "regulating"}, ir=("избран", "избран"))]),
    dict(id="zaballotirovat", lemma="забаллотировать", language="ru", pos="verb",
         etymon="et-bal", reflex_transparent=True,
         senses=[sense("zbl-ru-1", 1, "отвергнуть при баллотировке, не избрать",
                       "провалям при гласуване",
                       ted={"top": "regulating"}, ir=("отвергнут", "провален"))]),
    # --- scolding cluster (etymological-reflex false pair) ---------------
    dict(id="branit", lemma="бранить", language="ru", pos="verb", etymon="et-bran",
         reflex_transparent=True,
         senses=[sense("brn-ru-1", 1, "ругать, порицать", "гълча, мъмря",
                       ted={"top": "demeaning"}, ir=("поруган", "смъмрен"))]),
    dict(id="branya", lemma="браня", language="bg", pos="verb", etymon="et-bran",
         reflex_transparent=True,
         senses=[sense("brn-bg-1", 1, "защищать, оборонять",
                       "защищавам, отбранявам")]),
    dict(id="mamrya", lemma="мъмря", language="bg", pos="verb",
         senses=[sense("mmr-1", 1, "ворчать на кого-либо, выговаривать",
                       "гълча, карам се някому",
                       ted={"top": "demeaning"}, ir=("поруган", "смъмрен"))]),
    # --- empty-pair hosts -------------------------------------------------
    dict(id="zaklyuchit", lemma="заключить", language="ru", pos="verb",
         etymon="et-klyuch", reflex_transparent=True,
         senses=[sense("zkl-ru-1", 1, "лишить свободы, заключить под стражу",
                       "лиша от свобода, задържа под стража",
                       ted={"top": "blocking"}, ir=("заключен", "задържан"),
                       aspect="perfective")]),
    dict(id="zaklyucha", lemma="заключа", language="bg", pos="verb",
         etymon="et-klyuch", reflex_transparent=True,
         senses=[sense("zkl-bg-1", 1, "запереть на ключ",
                       "оставя в помещение, затворено с ключ")]),
    dict(id="zatvaryam", lemma="затварям", language="bg", pos="verb",
         senses=[sense("ztv-1", 1, "заключать в тюрьму, лишать свободы",
                       "затварям в затвор, лишавам от свобода",
                       ted={"top": "blocking"}, ir=("заключен", "задържан"))]),
    dict(id="posyagat", lemma="посягать", language="ru", pos="verb",
         etymon="et-posyag", reflex_transparent=True,
         senses=[sense("psg-ru-1", 1, "пытаться завладеть кем-либо, чем-либо",
                       "опитвам се да завладея нещо чуждо",
                       ted={"top": "annexing"}, ir=("застрашен", "засегнат"))]),
    dict(id="posyagam", lemma="посягам", language="bg", pos="verb",
         etymon="et-posyag", reflex_transparent=True,
         senses=[sense("psg-bg-1", 1, "протягивать руку для какого-либо действия",
                       "протягам ръка за някакво действие")]),
    dict(id="svalivat", lemma="сваливать", language="ru", pos="verb",
         etymon="et-sval", reflex_transparent=True,
         senses=[sense("svl-ru-1", 1, "сбрасывать вниз, беспорядочно складывать в кучу",
                       "хвърлям долу, струпвам безредно на куп",
                       ted={"top": "deforming"}, ir=("свален", "струпан"))]),
    dict(id="svalyam", lemma="свалям", language="bg", pos="verb",
         etymon="et-sval", reflex_transparent=True,
         senses=[sense("svl-bg-1", 1, "снимать, стаскивать (что-либо сверху)",
                       "снемам, смъквам (нещо отгоре)")]),
    dict(id="stovarvam", lemma="стоварвам", language="bg", pos="verb",
         senses=[sense("stv-1", 1, "сваливать груз, сбрасывать вниз",
                       "стоварвам товар, струпвам долу",
                       ted={"top": "deforming"}, ir=("свален", "струпан"))]),
    dict(id="naposledok", lemma="напоследок", language="ru", pos="adverb",
         etymon="et-posled", reflex_transparent=True,
         senses=[sense("nps-ru-1", 1, "под конец, в завершение",
                       "накрая, в самия край")]),
    dict(id="napoledak", lemma="напоследък", language="bg", pos="adverb",
         etymon="et-posled", reflex_transparent=True,
         senses=[sense("nps-bg-1", 1, "в последнее время", "в последно време")]),
    # --- diffuse / disjunctive unique words -------------------------------
    dict(id="udit", lemma="удить", language="ru", pos="verb",
         senses=[sense("udt-1", 1, "ловить рыбу удочкой", "ловя риба с въдица",
                       ted={"top": "blocking"}, ir=("пойман", "хванат"))]),
    dict(id="artobstrel", lemma="артобстрел", language="ru", pos="noun",
         senses=[sense("art-1", 1, "обстрел из артиллерийских орудий",
                       "обстрел с артилерийски оръдия",
                       ted={"top": "liquidating"}, ir=("разрушен", "разрушен"))]),
    dict(id="artachitsya", lemma="артачиться", language="ru", pos="verb",
         register=["colloquial"],
         senses=[sense("atc-1", 1, "упрямиться, не соглашаться (разг.)",
                       "инатя се, запъвам се (разг.)",
                       ted={"top": "expansive_behavior"})]),
    dict(id="uporstvam", lemma="упорствам", language="bg", pos="verb",
         senses=[sense("upr-1", 1, "упорствовать, упрямиться",
                       "проявявам упорство, инат",
                       ted={"top": "expansive_behavior"})]),
    dict(id="zabluzhdavam", lemma="заблуждавам", language="bg", pos="verb",
         senses=[sense("zbd-1", 1, "вводить кого-либо в заблуждение",
                       "въвеждам някого в заблуждение",
                       ted={"top": "disorienting"}, ir=("обманут", "излъган"))]),
    dict(id="zaputyvat", lemma="запутывать", language="ru", pos="verb",
         senses=[sense("zpt-1", 1, "сбивать с толку, приводить в замешательство",
                       "обърквам, сбърквам някого",
                       ted={"top": "disorienting"}, ir=("сбит с толку", "объркан"))]),
    dict(id="urodovat", lemma="уродовать", language="ru", pos="verb",
         senses=[sense("urd-1", 1, "делать уродливым, калечить",
                       "правя уродлив, осакатявам",
                       ted={"top": "deforming"}, ir=("изуродован", "обезобразен"))]),
    dict(id="obezobrazivat", lemma="обезобразивать", language="ru", pos="verb",
         senses=[sense("obz-1", 1, "лишать красоты, делать безобразным",
                       "лишавам от красота, обезобразявам",
                       ted={"top": "deforming"}, ir=("обезображен", "обезобразен"))]),
    dict(id="sglazit", lemma="сглазить", language="ru", pos="verb",
         senses=[sense("sgl-1", 1, "навести порчу дурным глазом (суеверие)",
                       "урочасам, повредя с уроки (суеверие)",
                       ted={"top": "interference"}, ir=("испорчен", "урочасан"),
                       aspect="perfective")]),
    dict(id="urochasvam", lemma="урочасвам", language="bg", pos="verb",
         senses=[sense("urc-1", 1, "наводить порчу дурным глазом",
                       "повреждам някого с уроки, с лош поглед",
                       ted={"top": "interference"}, ir=("испорчен", "урочасан"))]),
]


def descr(language, text):
    return {"descriptive": {"language": language, "text": text,
                            "is_definition_like": True}}


PAIRS = [
    # лгать / лъжа cluster
    {"ru": "lgat-1", "bg": "lzh-bg-1"},
    {"ru": "vrat-1", "bg": "lzh-bg-1"},
    {"ru": "lgat-2", "bg": "klv-1"},
    {"ru": "klt-1", "bg": "klv-1"},
    {"ru": "obm-1", "bg": "lzh-bg-2"},
    {"ru": "obm-1", "bg": "mam-1"},
    {"ru": descr("ru", "вводить в заблуждение"), "bg": "lzh-bg-2"},
    {"ru": "obm-2", "bg": "izn-1"},
    {"ru": "izm-ru-2", "bg": "izn-1"},
    {"ru": "izm-ru-1", "bg": "izm-bg-1"},
    # killing / execution
    {"ru": "ubv-ru-1", "bg": "ubv-bg-1"},
    {"ru": "grz-ru-1", "bg": "grz-bg-1"},
    {"ru": "fls-ru-1", "bg": "fls-bg-1"},
    {"ru": "vsh1-1", "bg": "ves-1"},
    {"ru": "vsh2-1", "bg": "bes-1"},
    {"ru": "kzn-1", "bg": "ekz-bg-1"},
    {"ru": "ekz-ru-1", "bg": "ekz-bg-1"},
    # spoiling
    {"ru": "prt-ru-1", "bg": "prt-bg-1"},
    {"ru": "prt-ru-1", "bg": "rzv-bg-2"},
    {"ru": "rzv-ru-1", "bg": "rzv-bg-1"},
    # borrowings
    {"ru": "ang-ru-1", "bg": "ang-bg-1"},
    {"ru": "arr-ru-1", "bg": "arr-bg-1"},
    # header showcases
    {"ru": "ahn-ru-1", "bg": "ahn-bg-1"},
    {"ru": "brm-1", "bg": "obr-bg-1"},
    {"ru": "obr-ru-1", "bg": "obr-bg-1"},
    {"ru": "bld-ru-1", "bg": "bld-bg-1"},
    {"ru": "liz-1", "bg": "bld-bg-1"},
    {"ru": "glv-ru-1", "bg": "glv-bg-1"},
    # shaming
    {"ru": "std-1", "bg": "zsr-1"},
    {"ru": "srm-ru-1", "bg": "srm-bg-1"},
    # voting
    {"ru": "bal-ru-1", "bg": "bal-bg-1"},
    {"ru": "zbl-ru-1", "bg": "bal-bg-1", "type": "false",
     "note": "аналогизация функций приставки"},
    # scolding
    {"ru": "brn-ru-1", "bg": "mmr-1"},
    {"ru": "brn-ru-1", "bg": "brn-bg-1", "type": "false",
     "note": "этимологическая рефлексия"},
    # empty-pair hosts
    {"ru": "zkl-ru-1", "bg": "ztv-1"},
    {"ru": "zkl-ru-1", "bg": "zkl-bg-1", "type": "empty"},
    {"ru": "psg-ru-1", "bg": descr("bg", "опитвам се да завладея нещо чуждо")},
    {"ru": "psg-ru-1", "bg": "psg-bg-1", "type": "empty"},
    {"ru": "svl-ru-1", "bg": "stv-1"},
    {"ru": "svl-ru-1", "bg": "svl-bg-1", "type": "empty"},
    {"ru": "nps-ru-1", "bg": descr("bg", "в самия край, най-накрая")},
    {"ru": "nps-ru-1", "bg": "nps-bg-1", "type": "empty"},
    # diffuse unique words
    {"ru": "udt-1", "bg": descr("bg", "ловя с въдица")},
    {"ru": "udt-1", "bg": descr("bg", "хващам на въдицата")},
    {"ru": "art-1", "bg": descr("bg", "артиллерийски обстрел")},
    {"ru": descr("ru", "вводить в заблуждение"), "bg": "zbd-1"},
    # disjunctive open sets
    {"ru": "obm-1", "bg": "zbd-1", "type": "disjunctive", "direction": "right_to_left"},
    {"ru": "zpt-1", "bg": "zbd-1", "type": "disjunctive", "direction": "right_to_left"},
    {"ru": "urd-1", "bg": "grz2-bg-1", "type": "disjunctive", "direction": "right_to_left"},
    {"ru": "prt-ru-1", "bg": "grz2-bg-1", "type": "disjunctive", "direction": "right_to_left"},
    {"ru": "obz-1", "bg": "grz2-bg-1", "type": "disjunctive", "direction": "right_to_left"},
    {"ru": "atc-1", "bg": "upr-1", "type": "disjunctive", "direction": "left_to_right"},
    {"ru": "sgl-1", "bg": "urc-1", "type": "disjunctive", "direction": "right_to_left"},
    # adjective showcase
    {"ru": "lzv-ru-1", "bg": "lzv-bg-1"},
]

LINKS = {
    "rubrics": {
        "НКРЯ": "http://www.ruscorpora.ru/",
        "БНК": "http://www.ibl.bas.bg/BGNC_classific_bg.htm",
        "АСС": "http://thesaurus.ru/dict/dict.php",
        "МОРФ": "http://www.gramota.ru/",
        "ФР": "http://feb-web.ru/",
        "СИН": "http://feb-web.ru/feb/mas/",
        "ПЗ": "http://lexicograf.ru/",
    },
    "word_links": {
        "лажа": "http://www.gramota.ru/slovari/dic/?word=лажа",
        "лыжа": "http://www.gramota.ru/slovari/dic/?word=лыжа",
        "браня": "http://www.ibl.bas.bg/rbe/lang/bg/браня/",
        "забаллотировать": "http://www.gramota.ru/slovari/dic/?word=забаллотировать",
        "заключа": "http://www.ibl.bas.bg/rbe/lang/bg/заключа/",
        "посягам": "http://www.ibl.bas.bg/rbe/lang/bg/посягам/",
        "свалям": "http://www.ibl.bas.bg/rbe/lang/bg/свалям/",
        "напоследък": "http://www.ibl.bas.bg/rbe/lang/bg/напоследък/",
    },
}


def main() -> None:
    lexeme_dir = SEED / "lexemes"
    lexeme_dir.mkdir(parents=True, exist_ok=True)
    for old in lexeme_dir.glob("*.json"):
        old.unlink()
    for lexeme in LEXEMES:
        path = lexeme_dir / f"{lexeme['id']}.json"
        path.write_text(json.dumps(lexeme, ensure_ascii=False, indent=2) + "\n",
                        encoding="utf-8")
    (SEED / "pairs.json").write_text(
        json.dumps(PAIRS, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    (SEED / "links.json").write_text(
        json.dumps(LINKS, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    print(f"seed written: {len(LEXEMES)} lexemes, {len(PAIRS)} pairs -> {SEED}")


if __name__ == "__main__":
    main()
