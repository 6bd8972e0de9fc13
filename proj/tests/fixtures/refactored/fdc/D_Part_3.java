package fixtures.refactored.fdc;

import javax.inject.Inject;

public class D_Part_3 {
	@Inject private D_Part_2 dPartTwo;
	@Inject private IExample7 seven;
	@Inject private IExample8 eight;
	@Inject private IExample9 nine;
	@Inject private IExampleN n;

	void methodThree() {
		dPartTwo.methodTwo();
		seven.run();
		eight.run();
		nine.run();
		n.run();
	}
}
