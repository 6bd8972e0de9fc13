package fixtures.boundary.fdc_46_5;

import javax.inject.Inject;

// 5 injected attributes; CC sum 5 + 9 + 13 + 12 + 7 = 46
public class Fat {
    @Inject
    private IService0 alpha;
    @Inject
    private IService1 beta;
    @Inject
    private IService2 gamma;
    @Inject
    private IService3 delta;
    @Inject
    private IService4 epsilon;

    // 1 if, 1 for, 1 while, 1 catch -> CC 5
    public int methodOne(int a) {
        if (a > 0) {
            alpha.run(a);
        }
        for (int i = 0; i < a; i++) {
            beta.step(i);
        }
        while (a > 102) {
            a--;
        }
        try {
            delta.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        alpha.touch();
        beta.touch();
        gamma.touch();
        delta.touch();
        epsilon.touch();
        return a;
    }

    // 2 if, 2 for, 2 while, 2 catch -> CC 9
    public int methodTwo(int a) {
        if (a > 0) {
            alpha.run(a);
        }
        for (int i = 0; i < a; i++) {
            beta.step(i);
        }
        while (a > 102) {
            a--;
        }
        try {
            delta.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        if (a > 4) {
            epsilon.run(a);
        }
        for (int i = 0; i < a; i++) {
            alpha.step(i);
        }
        while (a > 106) {
            a--;
        }
        try {
            gamma.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        alpha.touch();
        beta.touch();
        gamma.touch();
        delta.touch();
        epsilon.touch();
        return a;
    }

    // 3 if, 3 for, 3 while, 3 catch -> CC 13
    public int methodThree(int a) {
        if (a > 0) {
            alpha.run(a);
        }
        for (int i = 0; i < a; i++) {
            beta.step(i);
        }
        while (a > 102) {
            a--;
        }
        try {
            delta.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        if (a > 4) {
            epsilon.run(a);
        }
        for (int i = 0; i < a; i++) {
            alpha.step(i);
        }
        while (a > 106) {
            a--;
        }
        try {
            gamma.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        if (a > 8) {
            delta.run(a);
        }
        for (int i = 0; i < a; i++) {
            epsilon.step(i);
        }
        while (a > 110) {
            a--;
        }
        try {
            beta.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        alpha.touch();
        beta.touch();
        gamma.touch();
        delta.touch();
        epsilon.touch();
        return a;
    }

    // 3 if, 3 for, 3 while, 2 catch -> CC 12
    public int methodFour(int a) {
        if (a > 0) {
            alpha.run(a);
        }
        for (int i = 0; i < a; i++) {
            beta.step(i);
        }
        while (a > 102) {
            a--;
        }
        try {
            delta.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        if (a > 4) {
            epsilon.run(a);
        }
        for (int i = 0; i < a; i++) {
            alpha.step(i);
        }
        while (a > 106) {
            a--;
        }
        try {
            gamma.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        if (a > 8) {
            delta.run(a);
        }
        for (int i = 0; i < a; i++) {
            epsilon.step(i);
        }
        while (a > 110) {
            a--;
        }
        alpha.touch();
        beta.touch();
        gamma.touch();
        delta.touch();
        epsilon.touch();
        return a;
    }

    // 2 if, 2 for, 1 while, 1 catch -> CC 7
    public int methodFive(int a) {
        if (a > 0) {
            alpha.run(a);
        }
        for (int i = 0; i < a; i++) {
            beta.step(i);
        }
        while (a > 102) {
            a--;
        }
        try {
            delta.check(a);
        } catch (RuntimeException e) {
            a = 0;
        }
        if (a > 4) {
            epsilon.run(a);
        }
        for (int i = 0; i < a; i++) {
            alpha.step(i);
        }
        alpha.touch();
        beta.touch();
        gamma.touch();
        delta.touch();
        epsilon.touch();
        return a;
    }

}
