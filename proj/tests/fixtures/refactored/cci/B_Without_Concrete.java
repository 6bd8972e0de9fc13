package fixtures.refactored.cci;

import javax.inject.Inject;

public class B_Without_Concrete {
	@Inject
	IExampleInterface example;

	private void foo(){
		example.doSomething();
		// code omitted for brevity
	}
}
